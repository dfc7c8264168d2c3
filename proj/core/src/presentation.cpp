#include "kashina/presentation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace kashina {

bool Poly::operator==(const Poly& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (size_t i = 0; i < terms.size(); ++i)
    if (terms[i].word != o.terms[i].word || !(terms[i].coeff == o.terms[i].coeff)) return false;
  return true;
}

int Presentation::find_gen(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return int(i);
  return -1;
}

std::string Presentation::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (uint8_t g : w) {
    if (!s.empty()) s += ".";
    s += gens[g].name;
  }
  return s;
}

namespace {

// order components; see the header comment
struct OrderKey {
  long yd_count = 0;
  long h_mass_left = 0;           // sum over yd letters of weighted H mass to the left (x:0,y:1,t:2)
  unsigned __int128 x_measure = 0;  // sum over x letters of 4^(t's left) * (1 + yd's right)
  long n_t = 0, n_y = 0;
  long pairs_yx = 0, pairs_ty = 0;
};

}  // namespace

bool Presentation::word_less(const Word& a, const Word& b) const {
  auto key = [&](const Word& w, std::vector<int>& ydseq) {
    OrderKey k;
    long mass = 0;  // running weighted H mass
    long t_seen = 0, y_seen = 0;
    long yd_right = 0;
    for (uint8_t g : w)
      if (gens[g].kind == GenKind::YdLetter) ++yd_right;
    k.yd_count = yd_right;
    for (uint8_t g : w) {
      const GeneratorSymbol& gs = gens[g];
      if (gs.kind == GenKind::YdLetter) {
        ydseq.push_back(g);
        k.h_mass_left += mass;
        --yd_right;
      } else if (gs.sub == 0) {  // x
        unsigned __int128 p = 1;
        for (long q = 0; q < t_seen; ++q) p *= 4;
        k.x_measure += p * (unsigned __int128)(1 + yd_right);
        k.pairs_yx += y_seen;
      } else if (gs.sub == 1) {  // y
        mass += 1;
        ++y_seen;
        ++k.n_y;
        k.pairs_ty += t_seen;
      } else {  // t
        mass += 2;
        ++t_seen;
        ++k.n_t;
      }
    }
    return k;
  };
  std::vector<int> seq_a, seq_b;
  OrderKey ka = key(a, seq_a), kb = key(b, seq_b);
  if (ka.yd_count != kb.yd_count) return ka.yd_count < kb.yd_count;
  if (ka.h_mass_left != kb.h_mass_left) return ka.h_mass_left < kb.h_mass_left;
  if (seq_a != seq_b) return seq_a < seq_b;  // positionwise by generator precedence
  if (ka.x_measure != kb.x_measure) return ka.x_measure < kb.x_measure;
  if (ka.n_t != kb.n_t) return ka.n_t < kb.n_t;
  if (ka.n_y != kb.n_y) return ka.n_y < kb.n_y;
  if (ka.pairs_yx != kb.pairs_yx) return ka.pairs_yx < kb.pairs_yx;
  if (ka.pairs_ty != kb.pairs_ty) return ka.pairs_ty < kb.pairs_ty;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool Presentation::rule_decreasing(const RewriteRule& r) const {
  for (const auto& t : r.rhs.terms)
    if (!word_less(t.word, r.lhs)) return false;
  return true;
}

Poly Presentation::make_poly(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return word_less(b.word, a.word); });
  Poly out;
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!out.terms.empty() && out.terms.back().word == t.word) {
      out.terms.back().coeff += t.coeff;
      if (out.terms.back().coeff.is_zero()) out.terms.pop_back();
    } else {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

Poly Presentation::poly_add(const Poly& a, const Poly& b) const {
  std::vector<Term> all = a.terms;
  all.insert(all.end(), b.terms.begin(), b.terms.end());
  return make_poly(std::move(all));
}

Poly Presentation::poly_scale(const Poly& a, const GaussRat& c) const {
  Poly out;
  if (c.is_zero()) return out;
  out.terms = a.terms;
  for (auto& t : out.terms) t.coeff *= c;
  return out;
}

Poly Presentation::poly_mul(const Poly& a, const Poly& b) const {
  std::vector<Term> all;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) {
      Word w = ta.word;
      w.insert(w.end(), tb.word.begin(), tb.word.end());
      all.push_back({ta.coeff * tb.coeff, std::move(w)});
    }
  return make_poly(std::move(all));
}

namespace {

// first (position, rule) redex in the word, or nullopt
std::optional<std::pair<int, int>> find_redex(const Word& w, const Presentation& p, std::mt19937* rng) {
  if (!rng) {
    for (size_t pos = 0; pos < w.size(); ++pos)
      for (size_t r = 0; r < p.rules.size(); ++r) {
        const Word& lhs = p.rules[r].lhs;
        if (pos + lhs.size() > w.size()) continue;
        if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) return std::make_pair(int(pos), int(r));
      }
    return std::nullopt;
  }
  std::vector<std::pair<int, int>> matches;
  for (size_t pos = 0; pos < w.size(); ++pos)
    for (size_t r = 0; r < p.rules.size(); ++r) {
      const Word& lhs = p.rules[r].lhs;
      if (pos + lhs.size() > w.size()) continue;
      if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) matches.emplace_back(int(pos), int(r));
    }
  if (matches.empty()) return std::nullopt;
  std::uniform_int_distribution<size_t> pick(0, matches.size() - 1);
  return matches[pick(*rng)];
}

}  // namespace

Poly normal_form(const Poly& input, const Presentation& p, const ReduceOptions& opts) {
  auto cmp = [&](const Word& a, const Word& b) { return p.word_less(b, a); };  // descending: largest first
  std::map<Word, GaussRat, decltype(cmp)> pending(cmp);
  auto add_pending = [&](const Word& w, const GaussRat& c) {
    auto it = pending.find(w);
    if (it == pending.end()) {
      if (!c.is_zero()) pending.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  for (const auto& t : input.terms) add_pending(t.word, t.coeff);
  std::vector<Term> done;
  long steps = 0;
  while (!pending.empty()) {
    auto it = pending.begin();
    Word w = it->first;
    GaussRat c = it->second;
    pending.erase(it);
    auto redex = find_redex(w, p, opts.rng);
    if (!redex) {
      done.push_back({c, std::move(w)});
      continue;
    }
    if (++steps > opts.step_cap) throw std::runtime_error("normal_form: step cap exceeded");
    auto [pos, r] = *redex;
    const RewriteRule& rule = p.rules[r];
    for (const auto& t : rule.rhs.terms) {
      Word nw;
      nw.reserve(w.size() - rule.lhs.size() + t.word.size());
      nw.insert(nw.end(), w.begin(), w.begin() + pos);
      nw.insert(nw.end(), t.word.begin(), t.word.end());
      nw.insert(nw.end(), w.begin() + pos + rule.lhs.size(), w.end());
      add_pending(nw, c * t.coeff);
    }
  }
  return p.make_poly(std::move(done));
}

std::vector<Ambiguity> check_confluence(const Presentation& p) {
  std::vector<Ambiguity> bad;
  auto reduce_once = [&](const Word& w, int pos, int r) {
    const RewriteRule& rule = p.rules[r];
    std::vector<Term> terms;
    for (const auto& t : rule.rhs.terms) {
      Word nw;
      nw.insert(nw.end(), w.begin(), w.begin() + pos);
      nw.insert(nw.end(), t.word.begin(), t.word.end());
      nw.insert(nw.end(), w.begin() + pos + rule.lhs.size(), w.end());
      terms.push_back({t.coeff, std::move(nw)});
    }
    return p.make_poly(std::move(terms));
  };
  for (size_t a = 0; a < p.rules.size(); ++a)
    for (size_t b = 0; b < p.rules.size(); ++b) {
      const Word& la = p.rules[a].lhs;
      const Word& lb = p.rules[b].lhs;
      // overlap: a proper suffix of lhs_a equals a proper prefix of lhs_b
      for (size_t ov = 1; ov < std::min(la.size(), lb.size()); ++ov) {
        if (!std::equal(la.end() - ov, la.end(), lb.begin())) continue;
        Word w = la;
        w.insert(w.end(), lb.begin() + ov, lb.end());
        Poly ra = normal_form(reduce_once(w, 0, int(a)), p);
        Poly rb = normal_form(reduce_once(w, int(la.size() - ov), int(b)), p);
        Poly diff = p.poly_add(ra, p.poly_scale(rb, GaussRat(-1)));
        if (!diff.is_zero()) bad.push_back({int(a), int(b), int(la.size() - ov), w, diff});
      }
      // containment: lhs_b strictly inside lhs_a
      if (a != b && lb.size() < la.size()) {
        for (size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
          if (!std::equal(lb.begin(), lb.end(), la.begin() + pos)) continue;
          Poly ra = normal_form(reduce_once(la, 0, int(a)), p);
          Poly rb = normal_form(reduce_once(la, int(pos), int(b)), p);
          Poly diff = p.poly_add(ra, p.poly_scale(rb, GaussRat(-1)));
          if (!diff.is_zero()) bad.push_back({int(a), int(b), int(pos), la, diff});
        }
      }
    }
  return bad;
}

std::vector<std::string> complete_presentation(Presentation& p, int max_new_rules) {
  std::vector<std::string> added;
  for (int round = 0; round < max_new_rules; ++round) {
    auto ambs = check_confluence(p);
    if (ambs.empty()) return added;
    const Poly& diff = ambs.front().difference;
    // orient: leading word -> minus the rest over the leading coefficient
    const Term& lead = diff.terms.front();
    RewriteRule r;
    r.lhs = lead.word;
    std::vector<Term> rest(diff.terms.begin() + 1, diff.terms.end());
    r.rhs = p.poly_scale(p.make_poly(std::move(rest)), -lead.coeff.inv());
    r.name = "completion(" + p.word_str(r.lhs) + ")";
    if (!p.rule_decreasing(r)) throw std::logic_error("complete_presentation: non-decreasing completion rule");
    p.rules.push_back(std::move(r));
    added.push_back(p.rules.back().name);
  }
  if (!check_confluence(p).empty())
    throw std::runtime_error("complete_presentation: rule budget exhausted before confluence");
  return added;
}

std::vector<Word> enumerate_basis(const Presentation& p, long cap) {
  std::vector<Word> basis{Word{}};
  size_t frontier_begin = 0;
  while (frontier_begin < basis.size()) {
    size_t frontier_end = basis.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (size_t g = 0; g < p.gens.size(); ++g) {
        Word w = basis[i];
        w.push_back(uint8_t(g));
        // the prefix is normal, so a redex can only end at the last letter
        bool normal = true;
        for (const auto& rule : p.rules) {
          if (rule.lhs.size() > w.size()) continue;
          if (std::equal(rule.lhs.begin(), rule.lhs.end(), w.end() - rule.lhs.size())) {
            normal = false;
            break;
          }
        }
        if (normal) {
          basis.push_back(std::move(w));
          if (long(basis.size()) > cap) throw std::length_error("exceeds cap");
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return basis;  // already sorted by length then by generator index
}

StructureConstants structure_constants(const Presentation& p, long cap) {
  StructureConstants sc;
  sc.basis = enumerate_basis(p, cap);
  std::map<Word, int> index;
  for (size_t i = 0; i < sc.basis.size(); ++i) index[sc.basis[i]] = int(i);
  const int n = int(sc.basis.size());
  sc.parent.assign(n, -1);
  for (int i = 1; i < n; ++i) {
    Word w = sc.basis[i];
    w.pop_back();
    sc.parent[i] = index.at(w);
  }
  sc.mult.assign(n, {});
  for (int i = 0; i < n; ++i) {
    sc.mult[i].assign(n, {});
    sc.mult[i][0] = {{i, GaussRat(1)}};
    for (int j = 1; j < n; ++j) {
      uint8_t g = sc.basis[j].back();
      // (e_i e_parent) * g, reduced
      std::vector<Term> terms;
      for (const auto& [b, c] : sc.mult[i][sc.parent[j]]) {
        Word w = sc.basis[b];
        w.push_back(g);
        terms.push_back({c, std::move(w)});
      }
      Poly red = normal_form(p.make_poly(std::move(terms)), p);
      auto& cell = sc.mult[i][j];
      for (const auto& t : red.terms) cell.emplace_back(index.at(t.word), t.coeff);
      std::sort(cell.begin(), cell.end(), [](auto& a, auto& b) { return a.first < b.first; });
    }
  }
  return sc;
}

std::string presentation_to_json(const Presentation& p) {
  nlohmann::json j;
  j["order"] = "yd-major";
  auto& jg = j["generators"] = nlohmann::json::array();
  for (const auto& g : p.gens)
    jg.push_back({{"name", g.name}, {"kind", g.kind == GenKind::HLetter ? "h" : "yd"}, {"sub", g.sub}});
  auto& jr = j["rules"] = nlohmann::json::array();
  for (const auto& r : p.rules) {
    nlohmann::json rule;
    rule["name"] = r.name;
    auto& lhs = rule["lhs"] = nlohmann::json::array();
    for (uint8_t g : r.lhs) lhs.push_back(p.gens[g].name);
    auto& rhs = rule["rhs"] = nlohmann::json::array();
    for (const auto& t : r.rhs.terms) {
      nlohmann::json term;
      term["coeff"] = t.coeff.str();
      auto& w = term["word"] = nlohmann::json::array();
      for (uint8_t g : t.word) w.push_back(p.gens[g].name);
      rhs.push_back(std::move(term));
    }
    jr.push_back(std::move(rule));
  }
  return j.dump(1);
}

Presentation presentation_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Presentation p;
  for (const auto& g : j.at("generators")) {
    GeneratorSymbol s;
    s.name = g.at("name").get<std::string>();
    s.kind = g.at("kind").get<std::string>() == "h" ? GenKind::HLetter : GenKind::YdLetter;
    s.sub = g.at("sub").get<int>();
    p.gens.push_back(std::move(s));
  }
  auto to_word = [&](const nlohmann::json& arr) {
    Word w;
    for (const auto& name : arr) {
      int g = p.find_gen(name.get<std::string>());
      if (g < 0) throw std::invalid_argument("presentation_from_json: unknown generator " + name.get<std::string>());
      w.push_back(uint8_t(g));
    }
    return w;
  };
  for (const auto& r : j.at("rules")) {
    RewriteRule rule;
    rule.name = r.at("name").get<std::string>();
    rule.lhs = to_word(r.at("lhs"));
    std::vector<Term> terms;
    for (const auto& t : r.at("rhs"))
      terms.push_back({GaussRat::parse(t.at("coeff").get<std::string>()), to_word(t.at("word"))});
    rule.rhs = p.make_poly(std::move(terms));
    p.rules.push_back(std::move(rule));
  }
  return p;
}

}  // namespace kashina
