#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hibilab/bits.hpp"
#include "hibilab/errors.hpp"
#include "hibilab/lattice.hpp"

namespace hibilab {

/// Names of the variables of a squarefree polynomial ring; variable i is bit i.
///
/// A Hibi ring over P (|P| = n) lays out x_p as bit p and y_p as bit n + p, so
/// the same space doubles as the vertex set V + V' of the associated complexes.
class VarSpace {
 public:
  VarSpace() = default;

  static VarSpace plain(int n, std::vector<std::string> names = {}) {
    if (n > kMaskBits) throw TooLarge("at most 64 variables are supported");
    VarSpace v;
    v.names_ = std::move(names);
    if (v.names_.empty())
      for (int i = 0; i < n; ++i) v.names_.push_back("x" + std::to_string(i + 1));
    if (static_cast<int>(v.names_.size()) != n) throw SizeMismatch("variable name count does not match");
    return v;
  }

  static VarSpace hibi(int n, std::vector<std::string> xnames = {}, std::vector<std::string> ynames = {}) {
    if (2 * n > kMaskBits) throw TooLarge("Hibi rings are limited to |P| <= 32");
    if (xnames.empty())
      for (int i = 0; i < n; ++i) xnames.push_back("x" + std::to_string(i + 1));
    if (ynames.empty())
      for (int i = 0; i < n; ++i) ynames.push_back("y" + std::to_string(i + 1));
    if (static_cast<int>(xnames.size()) != n || static_cast<int>(ynames.size()) != n)
      throw SizeMismatch("variable name count does not match |P|");
    VarSpace v;
    v.names_ = std::move(xnames);
    v.names_.insert(v.names_.end(), ynames.begin(), ynames.end());
    v.hibi_rank_ = n;
    return v;
  }

  /// Hibi ring named after P: x-variables use P's names when P has single
  /// character names and `ynames` is supplied; otherwise x_<name>, y_<name>.
  static VarSpace hibi_for(const Poset& p, std::vector<std::string> ynames = {}) {
    std::vector<std::string> xn, yn;
    if (!ynames.empty() && p.has_names()) {
      xn = p.names();
      yn = std::move(ynames);
    } else if (p.has_names()) {
      for (int i = 0; i < p.size(); ++i) {
        xn.push_back("x_" + p.name(i));
        yn.push_back("y_" + p.name(i));
      }
    }
    return hibi(p.size(), std::move(xn), std::move(yn));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  Mask all() const { return low_bits(size()); }

  bool is_hibi() const { return hibi_rank_ >= 0; }
  /// |P| for a Hibi ring, -1 otherwise.
  int hibi_rank() const { return hibi_rank_; }
  int x(int p) const { return p; }
  int y(int p) const { return hibi_rank_ + p; }
  Mask x_part(Mask m) const { return m & low_bits(hibi_rank_); }
  Mask y_part(Mask m) const { return (m >> hibi_rank_) & low_bits(hibi_rank_); }
  Mask make(Mask xs, Mask ys) const { return xs | (ys << hibi_rank_); }
  /// x_p <-> y_p
  Mask swap_xy(Mask m) const { return make(y_part(m), x_part(m)); }

  /// Index of the variable called `name`, or -1.
  int find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
  }

  bool single_char_names() const {
    return std::all_of(names_.begin(), names_.end(), [](const std::string& s) { return s.size() == 1; });
  }

  friend bool operator==(const VarSpace& a, const VarSpace& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  int hibi_rank_ = -1;
};

/// Squarefree monomial: the set of variables dividing it.
class SquarefreeMonomial {
 public:
  constexpr SquarefreeMonomial() = default;
  constexpr explicit SquarefreeMonomial(Mask support) : support_(support) {}
  static constexpr SquarefreeMonomial one() { return SquarefreeMonomial{}; }
  static constexpr SquarefreeMonomial variable(int i) { return SquarefreeMonomial{bit(i)}; }

  constexpr Mask support() const { return support_; }
  int degree() const { return popcount(support_); }
  bool is_one() const { return support_ == 0; }
  bool is_variable() const { return popcount(support_) == 1; }
  bool divides(SquarefreeMonomial other) const { return is_subset(support_, other.support_); }

  friend constexpr auto operator<=>(const SquarefreeMonomial&, const SquarefreeMonomial&) = default;

 private:
  Mask support_ = 0;
};

inline SquarefreeMonomial lcm(SquarefreeMonomial a, SquarefreeMonomial b) {
  return SquarefreeMonomial{a.support() | b.support()};
}
inline SquarefreeMonomial gcd(SquarefreeMonomial a, SquarefreeMonomial b) {
  return SquarefreeMonomial{a.support() & b.support()};
}
inline bool divides(SquarefreeMonomial a, SquarefreeMonomial b) { return a.divides(b); }
/// a / gcd(a, b)
inline SquarefreeMonomial colon(SquarefreeMonomial a, SquarefreeMonomial b) {
  return SquarefreeMonomial{a.support() & ~b.support()};
}

/// Canonical generator order: by degree, then by support value.
inline bool canonical_less(SquarefreeMonomial a, SquarefreeMonomial b) {
  return a.degree() != b.degree() ? a.degree() < b.degree() : a.support() < b.support();
}

/// Removes duplicates and every monomial divisible by another one, and sorts
/// the survivors canonically.
inline std::vector<SquarefreeMonomial> minimalize(std::vector<SquarefreeMonomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<SquarefreeMonomial> out;
  for (auto g : gens)
    if (std::none_of(out.begin(), out.end(), [&](SquarefreeMonomial h) { return h.divides(g); })) out.push_back(g);
  return out;
}

/// Squarefree monomial ideal given by its minimal generators.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(VarSpace vars, std::vector<SquarefreeMonomial> gens)
      : vars_(std::move(vars)), gens_(minimalize(std::move(gens))) {
    for (auto g : gens_)
      if (!is_subset(g.support(), vars_.all())) throw GroundSetMismatch("generator uses an undeclared variable");
  }

  static MonomialIdeal zero(VarSpace vars) { return MonomialIdeal(std::move(vars), {}); }
  static MonomialIdeal unit(VarSpace vars) { return MonomialIdeal(std::move(vars), {SquarefreeMonomial::one()}); }
  /// P_F: the prime generated by the variables in F.
  static MonomialIdeal prime(VarSpace vars, Mask f) {
    std::vector<SquarefreeMonomial> g;
    for_each_bit(f, [&](int i) { g.push_back(SquarefreeMonomial::variable(i)); });
    return MonomialIdeal(std::move(vars), std::move(g));
  }

  const VarSpace& vars() const { return vars_; }
  const std::vector<SquarefreeMonomial>& gens() const { return gens_; }
  std::size_t num_gens() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(SquarefreeMonomial m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](SquarefreeMonomial g) { return g.divides(m); });
  }

  /// Common generator degree, or nullopt when degrees differ (or no generators).
  std::optional<int> generator_degree() const {
    if (gens_.empty()) return std::nullopt;
    const int d = gens_.front().degree();
    for (auto g : gens_)
      if (g.degree() != d) return std::nullopt;
    return d;
  }
  bool is_equigenerated() const { return gens_.empty() || generator_degree().has_value(); }

  /// Image under the involution x_p <-> y_p of a Hibi ring.
  MonomialIdeal swap_xy() const {
    if (!vars_.is_hibi()) throw GroundSetMismatch("x/y involution needs a Hibi ring");
    std::vector<SquarefreeMonomial> g;
    for (auto m : gens_) g.emplace_back(vars_.swap_xy(m.support()));
    return MonomialIdeal(vars_, std::move(g));
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.vars_ == b.vars_ && a.gens_ == b.gens_;
  }

 private:
  VarSpace vars_;
  std::vector<SquarefreeMonomial> gens_;
};

inline void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.vars() == b.vars())) throw GroundSetMismatch("ideals live in different polynomial rings");
}

/// Minimal generators of A + B.
inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<SquarefreeMonomial> g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.vars(), std::move(g));
}

/// Minimal generators of A n B: pairwise lcms, pruned for divisibility.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<SquarefreeMonomial> g;
  g.reserve(a.num_gens() * b.num_gens());
  for (auto u : a.gens())
    for (auto v : b.gens()) g.push_back(lcm(u, v));
  return MonomialIdeal(a.vars(), std::move(g));
}

/// u_q = x_{l(q)} y_{P \ l(q)}.
inline SquarefreeMonomial hibi_generator(const VarSpace& vars, Mask label) {
  const Mask full = low_bits(vars.hibi_rank());
  return SquarefreeMonomial{vars.make(label, full & ~label)};
}

/// H_S: the ideal generated by u_q for q in S. An empty S gives the zero ideal.
inline MonomialIdeal hibi_ideal(const Lattice& L, const Subset& s, const VarSpace& vars) {
  if (vars.hibi_rank() != L.irreducibles().size())
    throw GroundSetMismatch("Hibi ring does not match the lattice's join-irreducibles");
  std::vector<SquarefreeMonomial> g;
  for (int e : members_of(s)) g.push_back(hibi_generator(vars, L.label(e)));
  return MonomialIdeal(vars, std::move(g));
}

inline MonomialIdeal hibi_ideal(const Lattice& L, const Subset& s) {
  return hibi_ideal(L, s, VarSpace::hibi_for(L.irreducibles()));
}

/// Text form of a monomial: compact ("avwx") when every variable name is a
/// single character, otherwise joined with '*'. The unit monomial is "1".
inline std::string to_string(SquarefreeMonomial m, const VarSpace& vars) {
  if (m.is_one()) return "1";
  const bool compact = vars.single_char_names();
  std::string out;
  for_each_bit(m.support(), [&](int i) {
    if (!compact && !out.empty()) out += "*";
    out += vars.name(i);
  });
  return out;
}

enum class QuotientsVerdict { found, none, unknown };

struct LinearQuotients {
  QuotientsVerdict verdict = QuotientsVerdict::unknown;
  std::vector<int> order;  ///< indices into gens() when found
};

/// Searches for an order u_1..u_m of the minimal generators in which every
/// colon ideal (u_1..u_{i-1}) : u_i is generated by variables.
///
/// Whether u can follow a prefix depends only on the prefix as a set, so the
/// depth-first search memoizes dead prefix sets. With at most
/// `exhaustive_cap` generators a failed search is a proof (verdict none);
/// above the cap the search stops after `node_budget` expansions and a
/// failure is reported as unknown.
inline LinearQuotients has_linear_quotients(const MonomialIdeal& ideal, int exhaustive_cap = 12,
                                            std::size_t node_budget = 2'000'000) {
  if (!ideal.is_equigenerated()) throw NotEquigenerated("linear quotients are decided for equigenerated ideals only");
  const auto& g = ideal.gens();
  const int m = static_cast<int>(g.size());
  if (m > kMaskBits) throw TooManyGenerators("linear-quotient search is limited to 64 generators");
  LinearQuotients res;
  if (m <= 1) {
    res.verdict = QuotientsVerdict::found;
    if (m == 1) res.order = {0};
    return res;
  }
  auto can_follow = [&](Mask chosen, int i) {
    Mask variables = 0;
    std::vector<Mask> diffs;
    for_each_bit(chosen, [&](int j) {
      const Mask d = g[j].support() & ~g[i].support();
      if (popcount(d) == 1) variables |= d;
      diffs.push_back(d);
    });
    return std::all_of(diffs.begin(), diffs.end(), [&](Mask d) { return (d & variables) != 0; });
  };
  std::unordered_set<Mask> dead;
  std::vector<int> order;
  std::size_t nodes = 0;
  bool exhausted_budget = false;
  const Mask all = low_bits(m);
  auto dfs = [&](auto&& self, Mask chosen) -> bool {
    if (chosen == all) return true;
    if (dead.count(chosen)) return false;
    if (++nodes > node_budget) {
      exhausted_budget = true;
      return false;
    }
    for (int i = 0; i < m; ++i) {
      if (chosen & bit(i)) continue;
      if (chosen != 0 && !can_follow(chosen, i)) continue;
      order.push_back(i);
      if (self(self, chosen | bit(i))) return true;
      order.pop_back();
      if (exhausted_budget) return false;
    }
    dead.insert(chosen);
    return false;
  };
  if (dfs(dfs, 0)) {
    res.verdict = QuotientsVerdict::found;
    res.order = order;
  } else {
    res.verdict = (m <= exhaustive_cap && !exhausted_budget) ? QuotientsVerdict::none : QuotientsVerdict::unknown;
  }
  return res;
}

/// Checks a proposed linear-quotient order directly.
inline bool is_linear_quotient_order(const MonomialIdeal& ideal, const std::vector<int>& order) {
  const auto& g = ideal.gens();
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Mask ui = g[order[i]].support();
    for (std::size_t j = 0; j < i; ++j) {
      const Mask uj = g[order[j]].support();
      bool ok = false;
      for (std::size_t k = 0; k < i && !ok; ++k) {
        const Mask d = g[order[k]].support() & ~ui;
        ok = popcount(d) == 1 && (d & uj) != 0;
      }
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace hibilab
