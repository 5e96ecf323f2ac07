#include "interlace/commands.hpp"

#include "interlace/barrier.hpp"
#include "interlace/expectation.hpp"
#include "interlace/instance_io.hpp"
#include "interlace/multilinear.hpp"
#include "interlace/search.hpp"

#include <functional>
#include <map>

namespace interlace {

using nlohmann::ordered_json;

namespace {

ordered_json flags_json(const CommandFlags& f) {
  ordered_json j;
  j["width"] = to_string(f.width);
  j["guard_outcomes"] = f.guard;
  if (f.audit) j["audit"] = true;
  if (f.eps) j["eps"] = to_string(*f.eps);
  if (f.r) j["r"] = *f.r;
  if (f.delta) j["delta"] = to_string(*f.delta);
  return j;
}

ordered_json qf_json(const QuadraticFieldElement& x) {
  ordered_json j;
  j["a"] = to_string(x.a());
  j["b"] = to_string(x.b());
  j["radicand"] = to_string(x.radicand());
  j["approx"] = approx_label(x.upper_approx(pow2(-60)));
  return j;
}

ordered_json stats_json(const InstanceStats& st) {
  ordered_json j;
  j["expected_sum"] = to_json(st.expected_sum);
  j["eps"] = to_string(st.eps);
  j["sum_leq_identity"] = st.sum_leq_identity;
  return j;
}

ordered_json assignment_json(const Assignment& a) {
  ordered_json j;
  j["chosen"] = a.chosen;
  ordered_json vectors = ordered_json::array();
  for (const auto& v : a.realized_vectors) vectors.push_back(v ? to_json(*v) : ordered_json());
  j["realized_vectors"] = std::move(vectors);
  j["realized_char_poly"] = to_json(a.realized_char_poly);
  j["realized_norm"] = to_json(a.realized_norm);
  return j;
}

ordered_json partition_json(const Partition& p) {
  ordered_json j;
  j["r"] = p.r;
  j["blocks"] = p.blocks;
  ordered_json norms = ordered_json::array();
  for (const auto& b : p.block_norms) norms.push_back(to_json(b));
  j["block_norms"] = std::move(norms);
  j["delta"] = to_string(p.delta);
  j["bound"] = qf_json(p.bound);
  j["bound_upper"] = to_string(p.bound_upper);
  return j;
}

std::vector<HermitianMatrix> matrix_tuple(const InstanceFile& file) {
  if (file.matrices) return *file.matrices;
  return to_instance(file).expected_outers();
}

using Handler = std::function<std::string(const InstanceFile&, const CommandFlags&, ordered_json&)>;

std::string cmd_mixedchar(const InstanceFile& file, const CommandFlags& flags, ordered_json& out) {
  const auto matrices = matrix_tuple(file);
  const HermitianMatrix zero = HermitianMatrix::zero(file.dim);
  UniPoly mu;
  if (flags.audit) {
    const MultilinearDetElement e = truncated_determinant(zero, matrices);
    const MixedCharResult r = apply_one_minus_partials(e, true);
    mu = r.mu;
    ordered_json terms = ordered_json::array();
    for (const auto& [mask, poly] : r.subset_terms->terms) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < e.num_vars; ++i)
        if (mask >> i & 1U) subset.push_back(i);
      terms.push_back({{"subset", subset}, {"coeffs", to_json(poly)}});
    }
    out["subset_terms"] = std::move(terms);
  } else {
    mu = mixed_char_poly(zero, matrices);
  }
  out["m"] = matrices.size();
  out["mu"] = to_json(mu);
  out["mu_text"] = to_string(mu);
  out["real_rooted"] = is_real_rooted(mu);
  out["largest_root"] = to_json(largest_root(mu, flags.width));
  return "SATISFIED";
}

std::string cmd_verify_identity(const InstanceFile& file, const CommandFlags& flags, ordered_json& out) {
  const Instance inst = to_instance(file);
  const EnumerationOptions options{flags.guard, flags.threads};
  const UniPoly lhs = expected_char_poly_enumeration(inst, options);
  const UniPoly rhs = inst.specs.empty() ? UniPoly::monomial(Rational(1), inst.dim)
                                         : apply_one_minus_partials(truncated_determinant(inst.expected_outers())).mu;
  out["outcomes"] = inst.outcome_count();
  out["expected_char_poly"] = to_json(lhs);
  out["mixed_char_poly"] = to_json(rhs);
  out["equal"] = lhs == rhs;
  if (lhs != rhs) fail(ErrorCode::InternalInvariant, "expected and mixed characteristic polynomials differ");
  return "SATISFIED";
}

std::string cmd_certify(const InstanceFile& file, const CommandFlags& flags, ordered_json& out) {
  const auto matrices = matrix_tuple(file);
  Rational eps;
  if (flags.eps) {
    eps = *flags.eps;
  } else if (file.matrices) {
    for (const auto& a : matrices) eps = std::max(eps, a.trace());
  } else {
    eps = instance_stats(to_instance(file)).eps;
  }
  out["eps"] = to_string(eps);
  const BarrierCertificate c = certify_theorem2(file.dim, matrices, eps);
  out["x_threshold"] = qf_json(c.x_threshold);
  out["t_shift"] = qf_json(c.t_shift);
  out["delta"] = qf_json(c.delta);
  out["phi_upper"] = qf_json(c.phi_upper);
  ordered_json phis = ordered_json::array();
  for (const auto& p : c.phi_values) phis.push_back(qf_json(p));
  out["phi_values"] = std::move(phis);
  out["mu"] = to_json(c.mu);
  out["largest_root"] = to_json(c.mu_root);
  out["threshold_upper"] = to_string(c.threshold_upper);
  out["root_below_threshold"] = c.root_below_threshold;
  out["certified"] = c.certified;
  return "CERTIFIED";
}

SearchOptions search_options(const CommandFlags& flags) {
  SearchOptions o;
  o.width = flags.width;
  o.guard = flags.guard;
  o.threads = flags.threads;
  return o;
}

std::string cmd_assign(const InstanceFile& file, const CommandFlags& flags, ordered_json& out) {
  const Instance inst = to_instance(file);
  const InstanceStats st = instance_stats(inst);
  out["stats"] = stats_json(st);
  if (!st.sum_leq_identity) fail(ErrorCode::HypothesisViolated, "E Σ v_i v_i^* is not ⪯ I");
  const Assignment a = greedy_interlacing_assignment(inst, search_options(flags));
  out["assignment"] = assignment_json(a);
  out["expectation_root"] = to_json(*a.expectation_root);
  const QuadraticFieldElement threshold =
      QuadraticFieldElement(Rational(1 + st.eps), Rational(2), st.eps);
  const Rational upper = threshold.upper_approx(default_width());
  out["threshold"] = qf_json(threshold);
  out["threshold_upper"] = to_string(upper);
  const bool within = a.realized_norm.hi <= upper + flags.width;
  out["within_threshold"] = within;
  if (!within) fail(ErrorCode::InternalInvariant, "realized norm exceeds (1 + √ε)²");
  return "SATISFIED";
}

std::size_t required_r(const CommandFlags& flags) {
  if (!flags.r) fail(ErrorCode::InvalidArgument, "--r is required");
  return *flags.r;
}

std::string cmd_partition(const InstanceFile& file, const CommandFlags& flags, ordered_json& out) {
  const auto outers = partition_outers(file);
  Rational delta;
  if (flags.delta) {
    delta = *flags.delta;
  } else {
    for (const auto& u : outers) delta = std::max(delta, u.trace());
  }
  Partition p = partition_vectors(file.dim, outers, required_r(flags), delta, search_options(flags));
  out["partition"] = partition_json(p);
  out["max_block"] = heaviest_block(p);
  return "SATISFIED";
}

std::string cmd_bruteforce(const InstanceFile& file, const CommandFlags& flags, ordered_json& out) {
  out["mode"] = flags.mode;
  if (flags.mode == "assignment") {
    const Assignment a = brute_force_best_assignment(to_instance(file), search_options(flags));
    out["assignment"] = assignment_json(a);
    return "SATISFIED";
  }
  if (flags.mode == "partition") {
    const auto outers = partition_outers(file);
    SearchOptions o = search_options(flags);
    o.partition_guard = std::max<std::uint64_t>(o.partition_guard, 0);
    Partition p = brute_force_partition_oracle(file.dim, outers, required_r(flags), o);
    out["partition"] = partition_json(p);
    out["max_block"] = heaviest_block(p);
    return "SATISFIED";
  }
  fail(ErrorCode::InvalidArgument, "--mode must be assignment or partition");
}

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table{
      {"mixedchar", cmd_mixedchar}, {"verify-identity", cmd_verify_identity}, {"certify", cmd_certify},
      {"assign", cmd_assign},       {"partition", cmd_partition},             {"bruteforce", cmd_bruteforce},
  };
  return table;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::HypothesisViolated: return kExitHypothesis;
    case ErrorCode::GuardExceeded: return kExitGuard;
    case ErrorCode::Parse:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NotPsd: return kExitParse;
    case ErrorCode::InterlacingViolation:
    case ErrorCode::MixedCharNotRealRooted:
    case ErrorCode::NotRealRooted:
    case ErrorCode::InternalInvariant: return kExitInvariant;
    case ErrorCode::NotAboveRoots:
    case ErrorCode::PreconditionFail: return kExitFailure;
  }
  return kExitFailure;
}

CommandResult run_command(std::string_view command, std::string_view input_text, const CommandFlags& flags) {
  CommandResult result;
  ordered_json& report = result.report;
  report["command"] = std::string(command);
  report["flags"] = flags_json(flags);
  report["input_digest"] = input_digest(input_text);
  report["status"] = "ERROR";
  ordered_json results = ordered_json::object();
  try {
    const auto it = handlers().find(command);
    if (it == handlers().end()) fail(ErrorCode::InvalidArgument, "unknown command \"" + std::string(command) + "\"");
    const InstanceFile file = parse_instance_file(input_text);
    report["status"] = it->second(file, flags, results);
    result.exit_code = kExitOk;
  } catch (const Error& e) {
    report["status"] = e.code() == ErrorCode::HypothesisViolated ? "HYPOTHESIS_VIOLATED" : "ERROR";
    report["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    result.exit_code = exit_code_for(e.code());
  }
  report["results"] = std::move(results);
  return result;
}

}  // namespace interlace
