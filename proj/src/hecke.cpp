#include "iwahori/hecke.hpp"

#include "iwahori/errors.hpp"

namespace iwahori {

WeylDatum::WeylDatum(RootSystem rs, std::size_t max_order)
    : rs_(std::move(rs)), W_(WeylGroup::enumerate(rs_, max_order)), rho_(rs_.rho()) {
  weyl_denominator_ = GroupRingElem::monomial(rho_);
  for (const auto& root : rs_.positive_roots()) {
    weyl_denominator_ = weyl_denominator_ * one_minus(-root.coroot);
  }
}

std::shared_ptr<const WeylDatum> WeylDatum::make(const CartanType& t, std::size_t max_order) {
  return std::shared_ptr<const WeylDatum>(new WeylDatum(RootSystem::build(t), max_order));
}

GroupRingElem WeylDatum::divide_by_weyl_denominator(const GroupRingElem& f) const {
  GroupRingElem h = f.times_monomial(-rho_);
  for (const auto& root : rs_.positive_roots()) {
    auto next = try_exact_div(h, one_minus(-root.coroot));
    if (!next) {
      throw NotDivisible("not a multiple of the Weyl denominator: " + f.to_string());
    }
    h = std::move(*next);
  }
  return h;
}

// ---------------------------------------------------------------------------

HeckeCharacter HeckeCharacter::from_signs(const RootSystem& rs, std::string name,
                                          const std::vector<bool>& minus_one, bool validate) {
  const std::size_t n = rs.rank();
  if (minus_one.size() != n) throw InvalidCharacter("character needs one value per simple root");
  if (validate) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rs.braid_order(i, j) % 2 == 1 && minus_one[i] != minus_one[j]) {
          throw InvalidCharacter("character '" + name + "' differs across the odd braid bond (" +
                                 std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
  }
  HeckeCharacter e;
  e.name_ = std::move(name);
  e.minus_one_ = minus_one;
  for (std::size_t i = 0; i < n; ++i) {
    e.value_.push_back(minus_one[i] ? CoeffQ(-1) : CoeffQ::q_power(1));
  }
  std::vector<bool> minus_roots(rs.num_positive_roots(), false);
  for (std::size_t k = 0; k < minus_roots.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (minus_one[i] && rs.simple_length(i) == rs.positive_roots()[k].length) minus_roots[k] = true;
  return e.with_minus_roots(rs, std::move(minus_roots));
}

HeckeCharacter HeckeCharacter::with_minus_roots(const RootSystem& rs,
                                                std::vector<bool> minus_roots) const {
  HeckeCharacter e = *this;
  e.minus_roots_ = std::move(minus_roots);
  e.rho_eps_.reset();
  e.rho_error_.clear();
  try {
    e.rho_eps_ = rs.half_sum_of_coroots(e.minus_roots_);
  } catch (const NonIntegralCoweight& err) {
    e.rho_error_ = err.what();
  }
  return e;
}

HeckeCharacter HeckeCharacter::with_value(std::size_t i, const CoeffQ& v) const {
  HeckeCharacter e = *this;
  e.value_.at(i) = v;
  if (e.name_.empty() || e.name_.back() != '*') e.name_ += "*";
  return e;
}

const Coweight& HeckeCharacter::rho_eps() const {
  if (!rho_eps_) throw NonIntegralCoweight(rho_error_);
  return *rho_eps_;
}

std::vector<HeckeCharacter> HeckeCharacter::all(const RootSystem& rs) {
  std::vector<HeckeCharacter> out;
  out.push_back(by_name(rs, "triv"));
  out.push_back(by_name(rs, "sign"));
  if (!rs.simply_laced()) {
    out.push_back(by_name(rs, "neg-long"));
    out.push_back(by_name(rs, "neg-short"));
  }
  return out;
}

HeckeCharacter HeckeCharacter::by_name(const RootSystem& rs, const std::string& name) {
  const std::size_t n = rs.rank();
  std::vector<bool> minus(n, false);
  if (name == "triv") {
  } else if (name == "sign") {
    minus.assign(n, true);
  } else if (name == "neg-long" || name == "neg-short") {
    if (rs.simply_laced()) {
      throw InvalidCharacter("character '" + name + "' needs two root lengths; " +
                             rs.type().to_string() + " is simply laced");
    }
    const LengthClass target = name == "neg-long" ? LengthClass::Long : LengthClass::Short;
    for (std::size_t i = 0; i < n; ++i) minus[i] = rs.simple_length(i) == target;
  } else {
    throw InvalidCharacter("unknown character '" + name +
                           "' (expected triv, sign, neg-long or neg-short)");
  }
  return from_signs(rs, name, minus);
}

std::vector<HeckeCharacter> characters(const RootSystem& rs) { return HeckeCharacter::all(rs); }

Coweight rho_eps(const RootSystem&, const HeckeCharacter& eps) { return eps.rho_eps(); }

namespace {

GroupRingElem product_over(const RootSystem& rs, const HeckeCharacter& eps, bool minus) {
  GroupRingElem p = GroupRingElem::one(rs.rank());
  const auto& roots = rs.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (eps.minus_roots()[k] == minus) p = p * one_minus(roots[k].coroot, 1, 1);
  }
  return p;
}

const CoeffQ& q_minus_one() {
  static const CoeffQ c = CoeffQ::q_power(1) - CoeffQ(1);
  return c;
}

}  // namespace

GroupRingElem d_minus(const RootSystem& rs, const HeckeCharacter& eps) {
  return product_over(rs, eps, true);
}

GroupRingElem d_q(const RootSystem& rs, const HeckeCharacter& eps) {
  return product_over(rs, eps, false);
}

// ---------------------------------------------------------------------------

GroupRingElem t_act(const RootSystem& rs, const HeckeCharacter& eps, std::size_t i,
                    const GroupRingElem& f) {
  const Coweight& a = rs.simple_coroot(i);
  GroupRingElem fs = reflect(rs, i, f);
  GroupRingElem quotient = exact_div(f - fs, one_minus(-a));
  return fs.scaled(eps.value(i)) + quotient.scaled(q_minus_one());
}

GroupRingElem t_word(const WeylGroup& W, const HeckeCharacter& eps, std::span<const int> word,
                     const GroupRingElem& f) {
  if (!W.is_reduced(word)) throw NonReducedWord("word is not reduced");
  GroupRingElem g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    g = t_act(W.root_system(), eps, static_cast<std::size_t>(*it), g);
  }
  return g;
}

GroupRingElem demazure(const RootSystem& rs, std::size_t i, const GroupRingElem& f) {
  const Coweight& a = rs.simple_coroot(i);
  GroupRingElem num = f.times_monomial(-a) - reflect(rs, i, f);
  GroupRingElem den = GroupRingElem::monomial(-a) - GroupRingElem::one(rs.rank());
  return exact_div(num, den);
}

GroupRingElem demazure_word(const WeylGroup& W, std::span<const int> word, const GroupRingElem& f) {
  GroupRingElem g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    g = demazure(W.root_system(), static_cast<std::size_t>(*it), g);
  }
  return g;
}

GroupRingElem demazure_longest(const WeylGroup& W, const GroupRingElem& f) {
  return demazure_word(W, W[W.longest()].reduced_word, f);
}

GroupRingElem fraktur_t(const RootSystem& rs, const HeckeCharacter& eps, std::size_t i,
                        const GroupRingElem& f) {
  const Coweight& r = eps.rho_eps();
  return t_act(rs, eps, i, f.times_monomial(-r)).times_monomial(r);
}

GroupRingElem fraktur_t_closed_form(const RootSystem& rs, const HeckeCharacter& eps, std::size_t i,
                                    const GroupRingElem& f) {
  const std::size_t n = rs.rank();
  const Coweight& a = rs.simple_coroot(i);
  const GroupRingElem den = GroupRingElem::monomial(-a) - GroupRingElem::one(n);
  const GroupRingElem one_minus_q = GroupRingElem::constant(n, CoeffQ(1) - CoeffQ::q_power(1));
  const Coweight shift = eps.acts_by_minus_one(i) ? a : -a;
  const GroupRingElem twist = GroupRingElem::monomial(shift, 1, 1) - GroupRingElem::one(n);
  RationalElem lhs(one_minus_q * f, den);
  RationalElem rhs(twist * reflect(rs, i, f), den);
  return (lhs + rhs).clear();
}

GroupRingElem fraktur_word(const WeylGroup& W, const HeckeCharacter& eps,
                           std::span<const int> word, const GroupRingElem& f) {
  if (!W.is_reduced(word)) throw NonReducedWord("word is not reduced");
  GroupRingElem g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    g = fraktur_t(W.root_system(), eps, static_cast<std::size_t>(*it), g);
  }
  return g;
}

GroupRingElem intertwiner_op(const RootSystem& rs, const HeckeCharacter& eps, std::size_t i,
                             const GroupRingElem& f) {
  const std::size_t n = rs.rank();
  const Coweight& a = rs.simple_coroot(i);
  const CoeffQ one_minus_qinv = CoeffQ(1) - CoeffQ::q_power(-1);
  GroupRingElem first = f.times_monomial(a).scaled(one_minus_qinv);
  GroupRingElem second = (one_minus(a) * t_act(rs, eps, i, f)).times_monomial(Coweight::zero(n), 1, -1);
  return first + second;
}

GroupRingElem intertwiner_constant(const RootSystem& rs, const HeckeCharacter& eps, std::size_t i) {
  const std::size_t n = rs.rank();
  const Coweight& a = rs.simple_coroot(i);
  if (eps.acts_by_minus_one(i)) {
    return GroupRingElem::monomial(a) - GroupRingElem::monomial(Coweight::zero(n), 1, -1);
  }
  return one_minus(a, 1, -1);
}

namespace {

template <class Step>
std::vector<GroupRingElem> along_stored_words(const WeylGroup& W, const GroupRingElem& f, Step step) {
  std::vector<GroupRingElem> out(W.size());
  out[W.identity()] = f;
  for (std::size_t w = 1; w < W.size(); ++w) {
    const int first = W[w].reduced_word.front();
    const std::size_t tail = W.left_mult(static_cast<std::size_t>(first), w);
    out[w] = step(static_cast<std::size_t>(first), out[tail]);
  }
  return out;
}

GroupRingElem sum_all(std::vector<GroupRingElem> parts, std::size_t rank) {
  GroupRingElem s(rank);
  for (auto& p : parts) s += p;
  return s;
}

}  // namespace

std::vector<GroupRingElem> all_t(const WeylGroup& W, const HeckeCharacter& eps,
                                 const GroupRingElem& f) {
  return along_stored_words(W, f, [&](std::size_t i, const GroupRingElem& g) {
    return t_act(W.root_system(), eps, i, g);
  });
}

GroupRingElem sum_t(const WeylGroup& W, const HeckeCharacter& eps, const GroupRingElem& f) {
  return sum_all(all_t(W, eps, f), f.rank());
}

GroupRingElem sum_fraktur(const WeylGroup& W, const HeckeCharacter& eps, const GroupRingElem& f) {
  // pi^{rho_eps} (sum_w T_w) pi^{-rho_eps}: conjugate once instead of per generator.
  const Coweight& r = eps.rho_eps();
  return sum_t(W, eps, f.times_monomial(-r)).times_monomial(r);
}

GroupRingElem alternator(const WeylGroup& W, const GroupRingElem& f) {
  std::vector<GroupRingElem::Term> terms;
  terms.reserve(f.size() * W.size());
  for (std::size_t w = 0; w < W.size(); ++w) {
    const int sign = W[w].sign();
    for (const auto& t : f.terms()) {
      terms.push_back({{W.act(w, t.m.mu), t.m.q}, sign > 0 ? t.c : BigInt(-t.c)});
    }
  }
  return GroupRingElem::from_terms(f.rank(), std::move(terms));
}

GroupRingElem omega_apply_cleared(const WeylDatum& d, const GroupRingElem& f, OmegaOptions opts) {
  GroupRingElem a = alternator(d.W(), f.times_monomial(-d.rho()));
  GroupRingElem h = d.divide_by_weyl_denominator(a);
  if (opts.sign_correction && d.longest_length() % 2 == 1) h = -h;
  return h;
}

RationalElem omega_apply(const WeylDatum& d, const GroupRingElem& f, OmegaOptions opts) {
  return RationalElem(omega_apply_cleared(d, f, opts));
}

}  // namespace iwahori
