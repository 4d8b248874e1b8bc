#include "nsg/inequality.hpp"

#include "nsg/classification.hpp"

namespace nsg {

std::string_view to_string(CheckId id) {
  switch (id) {
    case CheckId::abhyankar: return "abhyankar";
    case CheckId::dimd: return "dimd";
    case CheckId::cor13_strong: return "cor13_strong";
    case CheckId::cor13_weak: return "cor13_weak";
    case CheckId::lech: return "lech";
    case CheckId::wilf: return "wilf";
    case CheckId::depth: return "depth";
    case CheckId::ag_key: return "ag_key";
  }
  return "unknown";
}

CheckId parse_check_id(std::string_view name) {
  for (CheckId id : kAllChecks) {
    if (to_string(id) == name) return id;
  }
  throw Error(ErrorCode::ParseError, "unknown check id '" + std::string(name) + "'");
}

std::string_view to_string(DimdClass c) {
  switch (c) {
    case DimdClass::full_monoid: return "full_monoid";
    case DimdClass::ordinary: return "ordinary";
    case DimdClass::none: return "none";
  }
  return "unknown";
}

InequalityVerdict InequalityVerdict::make(CheckId id, std::int64_t lhs, std::int64_t rhs, std::vector<int> gens) {
  return {id, lhs, rhs, lhs <= rhs, lhs == rhs, std::move(gens)};
}

InvariantNumbers numbers_of(const NumericalSemigroup& s) {
  return {s.multiplicity(), s.embedding_dimension(), s.conductor(), s.small_elements_count(), depth(s)};
}

std::vector<InequalityVerdict> evaluate_checks(const InvariantNumbers& v, const BookkeepingReport& b,
                                               const std::vector<int>& gens) {
  const auto n = v.n;
  return {
      InequalityVerdict::make(CheckId::abhyankar, v.nu, v.e, gens),
      InequalityVerdict::make(CheckId::dimd, v.e, (v.nu - 1) * n + 1, gens),
      InequalityVerdict::make(CheckId::cor13_strong, v.conductor, (v.nu - 1) * n * n + n, gens),
      InequalityVerdict::make(CheckId::cor13_weak, v.conductor, v.nu * n * n, gens),
      InequalityVerdict::make(CheckId::lech, v.conductor, v.e * n, gens),
      InequalityVerdict::make(CheckId::wilf, v.conductor, v.nu * n, gens),
      InequalityVerdict::make(CheckId::depth, v.depth_q, n, gens),
      InequalityVerdict::make(CheckId::ag_key, b.len_xRbar_m, b.len_ker_phi, gens),
  };
}

BookkeepingReport ag_bookkeeping_formula(const NumericalSemigroup& s) {
  if (s.is_full()) return {};
  const std::int64_t e = s.multiplicity();
  const std::int64_t n = s.small_elements_count();
  BookkeepingReport r;
  r.len_m_xc = e + (n - 1);
  r.len_xRbar_m = s.genus() - e + 1;
  r.len_ker_phi = static_cast<std::int64_t>(s.embedding_dimension()) * n - r.len_m_xc;
  r.e_c = s.conductor();
  return r;
}

BookkeepingReport ag_bookkeeping(const SemigroupPtr& s) {
  const auto formula = ag_bookkeeping_formula(*s);
  if (s->is_full()) return formula;

  const int e = s->multiplicity();
  const auto m = maximal_ideal(s);
  BookkeepingReport counted;
  // l(m / xc) = |M \ (e + C)|, l(xRbar / m) = |{z >= e} \ M|.
  counted.len_m_xc = length_between(m, translate(conductor_ideal(s), e));
  counted.len_xRbar_m = length_between(translate(naturals_ideal(s), e), m);
  counted.len_ker_phi =
      static_cast<std::int64_t>(s->embedding_dimension()) * s->small_elements_count() - counted.len_m_xc;
  counted.e_c = length_between(naturals_ideal(s), conductor_ideal(s));

  if (counted != formula) {
    throw Error(ErrorCode::InternalInconsistency, "bookkeeping formula and cardinality disagree on " + s->to_string());
  }
  if (counted.e_c != counted.len_xRbar_m + counted.len_m_xc) {
    throw Error(ErrorCode::InternalInconsistency, "e(c) != l(xRbar/m) + l(m/xc) on " + s->to_string());
  }
  if (counted.len_m_xc < 0 || counted.len_xRbar_m < 0 || counted.len_ker_phi < 0) {
    throw Error(ErrorCode::InternalInconsistency, "negative length in bookkeeping of " + s->to_string());
  }
  return counted;
}

std::vector<InequalityVerdict> check_all(const SemigroupPtr& s) {
  return evaluate_checks(numbers_of(*s), ag_bookkeeping(s), s->minimal_generators());
}

EqualityAnalysis equality_analysis(const NumericalSemigroup& s) {
  const auto v = numbers_of(s);
  const auto verdicts = evaluate_checks(v, ag_bookkeeping_formula(s), s.minimal_generators());
  EqualityAnalysis out;
  out.dimd_equality = verdicts[1].equality;
  out.cor13_strong_equality = verdicts[2].equality;
  out.cor13_weak_equality = verdicts[3].equality;
  out.lech_equality = verdicts[4].equality;
  out.dimd_class = s.is_full() ? DimdClass::full_monoid : is_ordinary(s) ? DimdClass::ordinary : DimdClass::none;
  const auto lech = is_lech_extremal(s);
  out.lech_k = lech.k;
  if (out.dimd_equality != (out.dimd_class != DimdClass::none)) {
    out.counterexample = verdicts[1];
  } else if (out.lech_equality != lech.extremal) {
    out.counterexample = verdicts[4];
  }
  return out;
}

}  // namespace nsg
