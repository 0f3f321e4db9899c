#include "vbraid/rewrite.hpp"

#include <sstream>

namespace vbraid {

std::string_view to_string(Direction d) {
  return d == Direction::LeftToRight ? "L2R" : "R2L";
}

Direction flip(Direction d) {
  return d == Direction::LeftToRight ? Direction::RightToLeft
                                     : Direction::LeftToRight;
}

std::vector<Relator> cancellation_relators(GroupKind kind, int n) {
  std::vector<Relator> out;
  if (!signature(kind).sigma) return out;
  for (int i = 1; i <= n - 1; ++i) {
    for (auto g : {sigma(i), sigma_inv(i)}) {
      out.push_back({relid::cancel(g), BraidWord(kind, n, {g, inverse(g)}),
                     BraidWord(kind, n)});
    }
  }
  return out;
}

RelationSet::RelationSet(GroupKind kind, int n) : kind_(kind), n_(n) {
  add(cancellation_relators(kind, n));
}

void RelationSet::add(const Relator& r) {
  if (r.lhs.kind() != kind_ || r.lhs.strands() != n_ || r.rhs.kind() != kind_ ||
      r.rhs.strands() != n_) {
    throw Error("relator " + r.id + " does not match the relation set's kind");
  }
  auto it = index_.find(r.id);
  if (it != index_.end()) {
    const auto& old = relators_[it->second];
    if (old.lhs != r.lhs || old.rhs != r.rhs) {
      throw std::logic_error("conflicting definitions for relator " + r.id);
    }
    return;
  }
  index_.emplace(r.id, relators_.size());
  relators_.push_back(r);
}

void RelationSet::add(const std::vector<Relator>& rs) {
  for (const auto& r : rs) add(r);
}

const Relator* RelationSet::find(std::string_view id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &relators_[it->second];
}

RelationSet RelationSet::from(const Presentation& p) {
  RelationSet rs(p.kind, p.n);
  rs.add(p.relators);
  return rs;
}

RelationSet RelationSet::named(GroupKind kind, int n,
                               const std::vector<std::string>& names) {
  RelationSet rs(kind, n);
  std::vector<std::string> all = names;
  if (all.empty()) {
    all = {"full", "derived"};
    if (has_reduced_presentation(kind)) all.push_back("reduced");
    if (kind == GroupKind::WB) all.push_back("reduced-single-welded");
  }
  for (const auto& name : all) {
    if (name == "full") {
      rs.add(full_presentation(kind, n).relators);
    } else if (name == "reduced") {
      rs.add(reduced_presentation(kind, n).relators);
    } else if (name == "reduced-single-welded") {
      rs.add(reduced_presentation(kind, n, Flavor::ReducedSingleWelded).relators);
    } else if (name == "derived") {
      rs.add(derived_relations(kind, n));
    } else {
      throw Error("unknown relation set '" + name + "'");
    }
  }
  return rs;
}

namespace {

struct Match {
  const std::vector<Generator>* from;
  const std::vector<Generator>* to;
};

Match sides(const RewriteStep& step, const RelationSet& rels) {
  const Relator* r = rels.find(step.relator_id);
  if (!r) throw StepError("unknown relator id '" + step.relator_id + "'");
  if (step.direction == Direction::LeftToRight) {
    return {&r->lhs.letters(), &r->rhs.letters()};
  }
  return {&r->rhs.letters(), &r->lhs.letters()};
}

std::string segment(const std::vector<Generator>& w, std::size_t pos,
                    std::size_t len) {
  if (pos >= w.size()) return "<end of word>";
  len = std::min(len, w.size() - pos);
  return format_letters(std::span(w).subspan(pos, len));
}

}  // namespace

std::vector<Generator> apply_step(const std::vector<Generator>& letters,
                                  const RewriteStep& step, const RelationSet& rels) {
  auto [from, to] = sides(step, rels);
  bool ok = step.position + from->size() <= letters.size() &&
            std::equal(from->begin(), from->end(), letters.begin() + step.position);
  if (!ok) {
    throw StepError("no match for " + step.relator_id + " " +
                    std::string(to_string(step.direction)) + " at @" +
                    std::to_string(step.position) + ": expected '" +
                    format_letters(*from) + "', found '" +
                    segment(letters, step.position, from->size()) + "'");
  }
  std::vector<Generator> out;
  out.reserve(letters.size() - from->size() + to->size());
  out.insert(out.end(), letters.begin(), letters.begin() + step.position);
  out.insert(out.end(), to->begin(), to->end());
  out.insert(out.end(), letters.begin() + step.position + from->size(), letters.end());
  return out;
}

BraidWord apply_step(const BraidWord& w, const RewriteStep& step,
                     const RelationSet& rels, bool auto_reduce) {
  if (w.kind() != rels.kind() || w.strands() != rels.strands()) {
    throw StepError("word and relation set disagree on kind or strand count");
  }
  auto out = apply_step(w.letters(), step, rels);
  if (auto_reduce) out = free_reduce(std::span<const Generator>(out));
  return BraidWord(w.kind(), w.strands(), std::move(out));
}

RelationSet relations_for(const DerivationScript& s) {
  return RelationSet::named(s.kind, s.n, s.relation_sets);
}

ReplayReport verify_script(const DerivationScript& s) {
  return verify_script(s, relations_for(s));
}

ReplayReport verify_script(const DerivationScript& s, const RelationSet& rels) {
  ReplayReport report;
  std::vector<Generator> cur = s.start.letters();
  for (std::size_t k = 0; k < s.steps.size(); ++k) {
    const auto& step = s.steps[k];
    StepTrace trace{step, cur, {}, 0, 0};
    try {
      auto [from, to] = sides(step, rels);
      trace.matched_length = from->size();
      trace.replaced_length = to->size();
      cur = apply_step(cur, step, rels);
      if (s.auto_reduce) cur = free_reduce(std::span<const Generator>(cur));
    } catch (const StepError& e) {
      report.failed_step = k;
      report.failure = "step " + std::to_string(k + 1) + ": " + e.what();
      report.final_word = cur;
      return report;
    }
    trace.after = cur;
    report.steps.push_back(std::move(trace));
  }
  report.final_word = cur;
  auto reduced_final = free_reduce(std::span<const Generator>(cur));
  auto reduced_target = free_reduce(std::span(s.target.letters()));
  report.reached_target = reduced_final == reduced_target;
  report.ok = report.reached_target;
  if (!report.ok) {
    report.failure = "final word '" + format_letters(cur) +
                     "' differs from target '" + format_word(s.target) + "'";
  }
  return report;
}

std::string format_replay(const DerivationScript& s, const ReplayReport& r) {
  std::ostringstream os;
  os << "script " << s.name << '\n';
  os << "start: " << format_word(s.start) << '\n';
  for (std::size_t k = 0; k < r.steps.size(); ++k) {
    const auto& t = r.steps[k];
    os << k + 1 << ". " << t.step.relator_id << ' ' << to_string(t.step.direction)
       << " @" << t.step.position << ": ";
    auto span = std::span<const Generator>(t.before);
    auto join = [](std::span<const Generator> part) {
      return part.empty() ? std::string() : format_letters(part);
    };
    std::string left = join(span.subspan(0, t.step.position));
    std::string mid = join(span.subspan(t.step.position, t.matched_length));
    std::string right = join(span.subspan(t.step.position + t.matched_length));
    std::string before = left + (left.empty() ? "[" : " [") + mid + "]" +
                         (right.empty() ? "" : " " + right);
    os << before << " => " << format_letters(t.after) << '\n';
  }
  if (r.failed_step) {
    os << "FAILED " << r.failure << '\n';
  } else {
    os << "final: " << format_letters(r.final_word) << '\n';
    os << "target: " << format_word(s.target) << '\n';
    os << (r.ok ? "OK" : "FAILED " + r.failure) << '\n';
  }
  return os.str();
}

std::string format_script(const DerivationScript& s) {
  std::ostringstream os;
  os << "script " << s.name << " kind=" << to_string(s.kind) << " n=" << s.n
     << " autoreduce=" << (s.auto_reduce ? 1 : 0);
  if (!s.relation_sets.empty()) {
    os << " relations=";
    for (std::size_t i = 0; i < s.relation_sets.size(); ++i) {
      os << (i ? "," : "") << s.relation_sets[i];
    }
  }
  os << '\n';
  os << "start: " << format_word(s.start) << '\n';
  for (const auto& step : s.steps) {
    os << "step: " << step.relator_id << ' ' << to_string(step.direction) << " @"
       << step.position;
    if (!step.note.empty()) os << " # " << step.note;
    os << '\n';
  }
  os << "target: " << format_word(s.target) << '\n';
  return os.str();
}

DerivationScript parse_script(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_header = false, have_start = false, have_target = false;
  DerivationScript s;
  auto fail = [&](const std::string& msg) {
    throw ParseError("script line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "script") {
      if (have_header) fail("duplicate header");
      if (!(ls >> s.name)) fail("missing script name");
      bool kind = false, n = false, ar = false;
      std::string kv;
      while (ls >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) fail("bad header field '" + kv + "'");
        auto key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "kind") {
          s.kind = parse_group_kind(val);
          kind = true;
        } else if (key == "n") {
          try {
            s.n = std::stoi(val);
          } catch (const std::exception&) {
            fail("bad n '" + val + "'");
          }
          n = true;
        } else if (key == "autoreduce") {
          if (val != "0" && val != "1") fail("autoreduce must be 0 or 1");
          s.auto_reduce = val == "1";
          ar = true;
        } else if (key == "relations") {
          std::istringstream vs(val);
          std::string name;
          while (std::getline(vs, name, ',')) s.relation_sets.push_back(name);
        } else {
          fail("unknown header field '" + key + "'");
        }
      }
      if (!kind || !n || !ar) fail("header needs kind=, n= and autoreduce=");
      have_header = true;
      continue;
    }
    if (!have_header) fail("missing script header");
    auto rest = [&]() {
      auto colon = line.find(':');
      return line.substr(colon + 1);
    };
    if (head == "start:") {
      s.start = parse_word(rest(), s.kind, s.n);
      have_start = true;
    } else if (head == "target:") {
      s.target = parse_word(rest(), s.kind, s.n);
      have_target = true;
    } else if (head == "step:") {
      RewriteStep step;
      std::string dir, pos;
      if (!(ls >> step.relator_id >> dir >> pos)) fail("bad step line");
      if (dir == "L2R") {
        step.direction = Direction::LeftToRight;
      } else if (dir == "R2L") {
        step.direction = Direction::RightToLeft;
      } else {
        fail("bad direction '" + dir + "'");
      }
      if (pos.size() < 2 || pos[0] != '@') fail("bad position '" + pos + "'");
      try {
        std::size_t used = 0;
        long long p = std::stoll(pos.substr(1), &used);
        if (p < 0 || used != pos.size() - 1) throw std::invalid_argument("pos");
        step.position = static_cast<std::size_t>(p);
      } catch (const std::exception&) {
        fail("bad position '" + pos + "'");
      }
      auto hash = line.find('#');
      if (hash != std::string::npos) {
        auto note = line.substr(hash + 1);
        auto b = note.find_first_not_of(' ');
        step.note = b == std::string::npos ? "" : note.substr(b);
      }
      s.steps.push_back(std::move(step));
    } else {
      fail("unknown line '" + head + "'");
    }
  }
  if (!have_header || !have_start || !have_target) {
    throw ParseError("script needs a header, start: and target:");
  }
  return s;
}

std::vector<RewriteStep> reversed(const std::vector<RewriteStep>& steps) {
  std::vector<RewriteStep> out;
  out.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    RewriteStep s = *it;
    s.direction = flip(s.direction);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace vbraid
