#include "sl2dirac/pipeline.hpp"

#include <algorithm>
#include <set>

#include "sl2dirac/errors.hpp"

namespace sl2dirac {

bool TheoremChecks::all_ok() const {
  return block_oracle_agrees && vogan_constraint && index_identity &&
         top_bottom && alternating_sum && expressions_match &&
         tilde_identities && degeneration_matches &&
         classical_gap_as_expected &&
         (!index_additive.has_value() || *index_additive);
}

namespace {

std::vector<Rational> derive_inf_chars(const ZeroEigenspace& z) {
  std::set<Rational> lams;
  for (const Weight w : z.weights()) {
    lams.insert(Rational(w < 0 ? -w : w));
  }
  return std::vector<Rational>(lams.begin(), lams.end());
}

}  // namespace

ModuleAnalysis analyze_module(const Sl2Module& m, const std::string& name,
                              const AnalysisOptions& opts) {
  ModuleAnalysis a;
  a.name = name;
  a.module = m;
  a.tensor = build_tensor(m);
  a.zero = generalized_zero_eigenspace(a.tensor);
  a.jordan = jordan_decomposition(a.zero);
  a.cohomology = full_cohomology(a.zero);
  a.index = dirac_index(a.cohomology);
  a.classical = classical_index(a.cohomology);
  a.inf_chars = opts.inf_chars.empty() ? derive_inf_chars(a.zero)
                                       : opts.inf_chars;

  a.exponent = default_even_exponent(a.zero);
  if (opts.exponent) {
    if (*opts.exponent % 2 != 0 || *opts.exponent < a.zero.nilpotency_order()) {
      throw Error(ErrorKind::InvalidArgument,
                  "exponent override must be even and at least the "
                  "nilpotency order");
    }
    a.exponent = *opts.exponent;
  }
  const NDifferential nd(a.zero, a.exponent);
  for (std::size_t i = 1; i + 1 <= a.exponent; ++i) {
    a.n_cohomology_dims[i] = n_cohomology(nd, i).dims();
  }

  TheoremChecks& c = a.checks;
  const BlockVerification bv = verify_blocks(a.jordan, a.zero);
  c.block_oracle_agrees =
      bv.ok && block_oracle_agrees(a.zero, a.cohomology, a.jordan);
  c.vogan_constraint = vogan_check_any(a.cohomology, a.inf_chars);
  c.index_identity = index_identity_check(a.zero, a.cohomology).holds;
  c.top_bottom = top_bottom_iso_all(a.zero);

  const VirtualRModule h_weights = a.cohomology.weight_multiset();
  const NDifferential nd_bigger(a.zero, a.exponent + 2);
  c.alternating_sum = stable_alternating_sum(nd) == h_weights &&
                      stable_alternating_sum(nd_bigger) == h_weights;
  const RemarkExpressions expr = remark_expressions(nd);
  c.expressions_match =
      expr.kernel_ladder == h_weights && expr.image_ladder == h_weights;
  c.tilde_identities = tilde_identities_hold(nd);

  c.has_infinitesimal_character = a.zero.nilpotency_order() <= 2;
  const bool degenerate = infchar_degeneration_check(a.cohomology);
  c.degeneration_matches = degenerate == c.has_infinitesimal_character;

  const bool classical_matches =
      classical_index_comparison(a.zero, a.cohomology).holds;
  // With infinitesimal character the classical functor already carries the
  // index; without it, odd blocks longer than 1 must open a gap.
  const bool odd_tall_blocks = [&] {
    for (const std::size_t s : a.jordan.size_multiset()) {
      if (s >= 3 && s % 2 == 1) return true;
    }
    return false;
  }();
  c.classical_gap_as_expected = classical_matches == !odd_tall_blocks;

  return a;
}

std::vector<Rational> builtin_inf_chars(const std::string& selector) {
  if (selector == "P") return {Rational(1)};
  if (selector == "trivial") return {Rational(1)};
  if (selector.rfind("verma:", 0) == 0) {
    try {
      return {Rational(std::stoi(selector.substr(6)) + 1)};
    } catch (const std::logic_error&) {
      return {};
    }
  }
  if (selector.rfind("finite:", 0) == 0) {
    try {
      return {Rational(std::stol(selector.substr(7)))};
    } catch (const std::logic_error&) {
      return {};
    }
  }
  if (selector.rfind("sum:(", 0) == 0 && selector.back() == ')') {
    const std::string inner = selector.substr(5, selector.size() - 6);
    std::set<Rational> lams;
    std::size_t start = 0;
    while (start <= inner.size()) {
      const std::size_t comma = inner.find(',', start);
      const std::string part =
          inner.substr(start, comma == std::string::npos ? std::string::npos
                                                         : comma - start);
      for (const Rational& r : builtin_inf_chars(part)) lams.insert(r);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return std::vector<Rational>(lams.begin(), lams.end());
  }
  return {};
}

ModuleAnalysis analyze_selector(const std::string& selector,
                                const AnalysisOptions& opts) {
  AnalysisOptions with_chars = opts;
  if (with_chars.inf_chars.empty()) {
    with_chars.inf_chars = builtin_inf_chars(selector);
  }
  return analyze_module(resolve_module_selector(selector, opts.depth), selector,
                        with_chars);
}

SequenceAnalysis analyze_sequence(const ShortExactSequence& s,
                                  const std::string& name,
                                  const AnalysisOptions& opts) {
  SequenceAnalysis sa;
  sa.name = name;
  AnalysisOptions member_opts = opts;
  member_opts.exponent.reset();

  AnalysisOptions sub_opts = member_opts;
  AnalysisOptions quot_opts = member_opts;
  if (name == "P") {
    sub_opts.inf_chars = {Rational(1)};
    quot_opts.inf_chars = {Rational(1)};
  } else if (name == "infchar") {
    sub_opts.inf_chars = {Rational(1)};
    quot_opts.inf_chars = {Rational(1)};
  }
  sa.sub = analyze_module(s.sub(), name + "/sub", sub_opts);
  sa.total = analyze_module(s.total(), name + "/total", member_opts);
  sa.quot = analyze_module(s.quot(), name + "/quot", quot_opts);

  const SequenceSpaces spaces = restrict_sequence(s);
  std::size_t exponent = std::max(
      {default_even_exponent(sa.sub.zero), default_even_exponent(sa.total.zero),
       default_even_exponent(sa.quot.zero)});
  if (opts.exponent) {
    if (*opts.exponent % 2 != 0 || *opts.exponent < exponent) {
      throw Error(ErrorKind::InvalidArgument,
                  "exponent override must be even and dominate every "
                  "nilpotency order in the sequence");
    }
    exponent = *opts.exponent;
  }
  sa.exponent = exponent;

  sa.checks.six_term_exact = true;
  sa.checks.connecting_well_defined = true;
  for (std::size_t i = 1; i + 1 <= exponent; ++i) {
    const SixTermResult r = six_term_verify(spaces, i, exponent);
    sa.checks.six_term_exact = sa.checks.six_term_exact && r.exact;
    sa.checks.connecting_well_defined =
        sa.checks.connecting_well_defined && r.connecting_well_defined;
  }

  sa.checks.index_additive =
      index_additive(sa.sub.index, sa.total.index, sa.quot.index);
  sa.classical_additive =
      index_additive(sa.sub.classical, sa.total.classical, sa.quot.classical);
  const bool any_generalized = !sa.sub.checks.has_infinitesimal_character ||
                               !sa.total.checks.has_infinitesimal_character ||
                               !sa.quot.checks.has_infinitesimal_character;
  // The classical index stays additive when every member has infinitesimal
  // character. A tall odd block elsewhere breaks it; compare against the
  // honest recomputation instead of assuming.
  const VirtualRModule classical_gap =
      sa.total.classical - sa.sub.classical - sa.quot.classical;
  sa.checks.classical_additivity_gap_as_expected =
      any_generalized ? true : classical_gap.is_zero();
  if (!any_generalized && !sa.classical_additive) {
    sa.checks.classical_additivity_gap_as_expected = false;
  }

  const CompatibleDecomposition dec = compatible_decomposition(spaces);
  sa.certificate = triangle_criterion(sa.sub.cohomology.classes.size(),
                                      sa.total.cohomology.classes.size(),
                                      sa.quot.cohomology.classes.size());
  if (dec.ok) {
    sa.triangle = build_triangle(dec);
    sa.checks.triangle_exists = sa.triangle.exists && sa.certificate.exists;
    sa.checks.triangle_exact = sa.triangle.exact;
    sa.checks.splits_match_certificate =
        sa.certificate.exists && sa.triangle.splits == sa.certificate.splits &&
        sa.triangle.dims == sa.certificate.dims;
  }
  return sa;
}

SequenceAnalysis analyze_sequence_selector(const std::string& selector,
                                           const AnalysisOptions& opts) {
  if (selector == "P") {
    return analyze_sequence(build_module_p(opts.depth).sequence, "P", opts);
  }
  if (selector == "infchar") {
    return analyze_sequence(build_infchar_sequence(opts.depth), "infchar",
                            opts);
  }
  if (selector.find('.') != std::string::npos ||
      selector.find('/') != std::string::npos) {
    return analyze_sequence(load_sequence_file(selector, opts.depth), selector,
                            opts);
  }
  throw Error(ErrorKind::ParseFailure,
              "unknown sequence selector: " + selector);
}

}  // namespace sl2dirac
