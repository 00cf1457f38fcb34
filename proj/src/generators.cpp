#include "ordsym/generators.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "ordsym/rng.hpp"

namespace ordsym {

namespace {

double draw_innovation(Rng& rng, Innovation innovation, int t_dof) {
  switch (innovation) {
    case Innovation::Gaussian:
      return rng.normal();
    case Innovation::LognormalCentered:
      // exp(Z) centered at its mean exp(1/2).
      return std::exp(rng.normal()) - std::exp(0.5);
    case Innovation::Chi2One: {
      const double z = rng.normal();
      return z * z;
    }
    case Innovation::ExpOne:
      return -std::log(rng.uniform());
    case Innovation::Cauchy:
      return std::tan(std::numbers::pi * (rng.uniform() - 0.5));
    case Innovation::StudentT: {
      if (t_dof == 1) return std::tan(std::numbers::pi * (rng.uniform() - 0.5));
      const double z = rng.normal();
      double chi2 = 0.0;
      for (int i = 0; i < t_dof; ++i) {
        const double v = rng.normal();
        chi2 += v * v;
      }
      return z / std::sqrt(chi2 / t_dof);
    }
  }
  throw BadProcessSpec("unhandled innovation");
}

double pareto_quantile(double u, double su, double xm, double alpha) {
  (void)u;
  return xm * std::pow(su, -1.0 / alpha);
}

double laplace_quantile(double u, double su, double mu, double b) {
  if (u < 0.5) return mu + b * std::log(2.0 * u);
  return mu - b * std::log(2.0 * su);
}

double logistic_quantile(double u, double su, double mu, double s) {
  return mu + s * (std::log(u) - std::log(su));
}

double cauchy_quantile(double u, double su, double mu, double gamma) {
  // Symmetric two-sided form keeps precision in both tails.
  if (u < 0.5) return mu - gamma / std::tan(std::numbers::pi * u);
  return mu + gamma / std::tan(std::numbers::pi * su);
}

}  // namespace

Eigen::VectorXd subordinate(Eigen::Ref<const Eigen::VectorXd> gaussian_series,
                            const Subordination& marginal, double mu, double sigma) {
  if (sigma <= 0.0) throw BadProcessSpec("subordination requires sigma > 0");
  Eigen::VectorXd out(gaussian_series.size());
  for (Eigen::Index i = 0; i < gaussian_series.size(); ++i) {
    const double z = (gaussian_series[i] - mu) / sigma;
    // Both tails of Phi evaluated at full relative precision so the composed
    // map stays strictly increasing in floating point.
    const double u = normal_cdf(z);
    const double su = normal_sf(z);
    switch (marginal.marginal) {
      case Marginal::None:
        out[i] = gaussian_series[i];
        break;
      case Marginal::Gaussian:
        out[i] = z;
        break;
      case Marginal::Pareto:
        out[i] = pareto_quantile(u, su, marginal.a, marginal.b);
        break;
      case Marginal::Laplace:
        out[i] = laplace_quantile(u, su, marginal.a, marginal.b);
        break;
      case Marginal::Logistic:
        out[i] = logistic_quantile(u, su, marginal.a, marginal.b);
        break;
      case Marginal::Cauchy:
        out[i] = cauchy_quantile(u, su, marginal.a, marginal.b);
        break;
      default:
        throw UnknownMarginal("marginal has no quantile function");
    }
  }
  return out;
}

double gaussian_process_sd(const ProcessSpec& spec) {
  switch (spec.family) {
    case ProcessFamily::Iid: return 1.0;
    case ProcessFamily::Ar1: return 1.0 / std::sqrt(1.0 - spec.theta * spec.theta);
    case ProcessFamily::Ma1: return std::sqrt(1.0 + spec.theta * spec.theta);
  }
  return 1.0;
}

Eigen::VectorXd generate(const ProcessSpec& spec, std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw BadProcessSpec("series length must be positive");
  if (spec.family == ProcessFamily::Ar1 && std::abs(spec.theta) >= 1.0)
    throw UnstableAR("|theta| = " + std::to_string(std::abs(spec.theta)) + " >= 1");
  if (spec.subordination.marginal != Marginal::None && spec.innovation != Innovation::Gaussian)
    throw BadProcessSpec("subordination requires a Gaussian base process");

  Rng rng(mix_seed(seed, 0x67656e));
  Eigen::VectorXd x(n);
  switch (spec.family) {
    case ProcessFamily::Iid: {
      for (std::int64_t i = 0; i < n; ++i) x[i] = draw_innovation(rng, spec.innovation, spec.t_dof);
      break;
    }
    case ProcessFamily::Ma1: {
      double prev = draw_innovation(rng, spec.innovation, spec.t_dof);
      for (std::int64_t i = 0; i < n; ++i) {
        const double eps = draw_innovation(rng, spec.innovation, spec.t_dof);
        x[i] = eps + spec.theta * prev;
        prev = eps;
      }
      break;
    }
    case ProcessFamily::Ar1: {
      const int burn = std::max(spec.burn_in, 100);
      double state = 0.0;
      for (int i = 0; i < burn; ++i)
        state = spec.theta * state + draw_innovation(rng, spec.innovation, spec.t_dof);
      for (std::int64_t i = 0; i < n; ++i) {
        state = spec.theta * state + draw_innovation(rng, spec.innovation, spec.t_dof);
        x[i] = state;
      }
      break;
    }
  }
  if (spec.subordination.marginal != Marginal::None)
    return subordinate(x, spec.subordination, 0.0, gaussian_process_sd(spec));
  return x;
}

PowerResult power_experiment(const ProcessSpec& spec, const Partition& partition, std::int64_t n,
                             int replicates, const TestConfig& config, std::uint64_t seed) {
  if (replicates < 1) throw Error("need at least one replicate");
  PowerResult result;
  result.p_values.resize(replicates);
  result.statistics.resize(replicates);

  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const int rep = next.fetch_add(1);
      if (rep >= replicates || failed.load()) return;
      try {
        const Eigen::VectorXd series =
            generate(spec, n, mix_seed(seed, static_cast<std::uint64_t>(rep), 1));
        TestConfig rep_config = config;
        rep_config.seed = mix_seed(seed, static_cast<std::uint64_t>(rep), 2);
        rep_config.threads = 1;
        const TestReport report = run_test(series, partition.order(), partition, rep_config);
        result.p_values[rep] = report.p_value;
        result.statistics[rep] = report.statistic;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) first_error = e.what();
        return;
      }
    }
  };

  const int n_workers = std::max(1, std::min(config.threads, replicates));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw Error("power experiment replicate failed: " + first_error);

  result.rejection_rate =
      static_cast<double>((result.p_values.array() < config.alpha).count()) / replicates;
  return result;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(s), &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw BadProcessSpec(std::string("cannot parse ") + what + " from '" + std::string(s) + "'");
  }
}

Innovation parse_innovation(std::string_view name, int& t_dof) {
  if (name == "gaussian") return Innovation::Gaussian;
  if (name == "lognormal" || name == "lognormal_centered") return Innovation::LognormalCentered;
  if (name == "chi2_1") return Innovation::Chi2One;
  if (name == "exp_1") return Innovation::ExpOne;
  if (name == "cauchy") return Innovation::Cauchy;
  if (name.starts_with("student_t(") && name.ends_with(")")) {
    const auto inner = name.substr(10, name.size() - 11);
    const double nu = parse_real(inner, "student_t degrees of freedom");
    if (nu < 1.0 || nu != std::floor(nu) || nu > 200.0)
      throw BadProcessSpec("student_t requires an integer nu in [1, 200]");
    t_dof = static_cast<int>(nu);
    return Innovation::StudentT;
  }
  throw BadProcessSpec("unknown innovation '" + std::string(name) + "'");
}

Subordination parse_subordination(std::string_view body) {
  body = trim(body);
  if (body == "none") return {};
  const auto open = body.find('(');
  if (open == std::string_view::npos || !body.ends_with(")"))
    throw UnknownMarginal("expected marginal(name)(a,b), got '" + std::string(body) + "'");
  const std::string_view name = trim(body.substr(0, open));
  const std::string_view args = body.substr(open + 1, body.size() - open - 2);
  const auto comma = args.find(',');
  if (comma == std::string_view::npos)
    throw UnknownMarginal("marginal '" + std::string(name) + "' needs two parameters");
  Subordination sub;
  sub.a = parse_real(trim(args.substr(0, comma)), "marginal parameter");
  sub.b = parse_real(trim(args.substr(comma + 1)), "marginal parameter");
  if (name == "pareto") {
    sub.marginal = Marginal::Pareto;
    if (sub.a <= 0.0 || sub.b <= 0.0) throw UnknownMarginal("pareto needs x_m > 0 and alpha > 0");
  } else if (name == "laplace") {
    sub.marginal = Marginal::Laplace;
    if (sub.b <= 0.0) throw UnknownMarginal("laplace needs scale b > 0");
  } else if (name == "logistic") {
    sub.marginal = Marginal::Logistic;
    if (sub.b <= 0.0) throw UnknownMarginal("logistic needs scale s > 0");
  } else if (name == "cauchy") {
    sub.marginal = Marginal::Cauchy;
    if (sub.b <= 0.0) throw UnknownMarginal("cauchy needs scale gamma > 0");
  } else {
    throw UnknownMarginal("unknown marginal '" + std::string(name) + "'");
  }
  return sub;
}

}  // namespace

ProcessSpec parse_process_spec(std::string_view text) {
  std::string_view head = trim(text);
  std::string_view sub_part;
  if (const auto bar = head.find('|'); bar != std::string_view::npos) {
    sub_part = trim(head.substr(bar + 1));
    head = trim(head.substr(0, bar));
    if (!sub_part.starts_with("subordinate(") || !sub_part.ends_with(")"))
      throw BadProcessSpec("expected |subordinate(...), got '" + std::string(sub_part) + "'");
    sub_part = sub_part.substr(12, sub_part.size() - 13);
  }

  const auto open = head.find('(');
  if (open == std::string_view::npos || !head.ends_with(")"))
    throw BadProcessSpec("expected family(key=value,...), got '" + std::string(head) + "'");
  const std::string_view family = trim(head.substr(0, open));
  const std::string_view args = head.substr(open + 1, head.size() - open - 2);

  ProcessSpec spec;
  if (family == "iid") spec.family = ProcessFamily::Iid;
  else if (family == "ar1") spec.family = ProcessFamily::Ar1;
  else if (family == "ma1") spec.family = ProcessFamily::Ma1;
  else throw BadProcessSpec("unknown process family '" + std::string(family) + "'");

  bool saw_theta = false;
  std::size_t pos = 0;
  while (pos < args.size()) {
    // Split on commas at depth zero so student_t(3) stays intact.
    std::size_t end = pos;
    int depth = 0;
    while (end < args.size() && (args[end] != ',' || depth > 0)) {
      if (args[end] == '(') ++depth;
      if (args[end] == ')') --depth;
      ++end;
    }
    const std::string_view kv = trim(args.substr(pos, end - pos));
    pos = end + 1;
    if (kv.empty()) continue;
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos)
      throw BadProcessSpec("expected key=value, got '" + std::string(kv) + "'");
    const std::string_view key = trim(kv.substr(0, eq));
    const std::string_view value = trim(kv.substr(eq + 1));
    if (key == "theta") {
      spec.theta = parse_real(value, "theta");
      saw_theta = true;
    } else if (key == "innov") {
      spec.innovation = parse_innovation(value, spec.t_dof);
    } else if (key == "burnin") {
      spec.burn_in = static_cast<int>(parse_real(value, "burnin"));
      if (spec.burn_in < 100) throw BadProcessSpec("burnin must be at least 100");
    } else {
      throw BadProcessSpec("unknown key '" + std::string(key) + "'");
    }
  }
  if (spec.family != ProcessFamily::Iid && !saw_theta)
    throw BadProcessSpec(std::string(family) + " requires theta=");
  if (spec.family == ProcessFamily::Ar1 && std::abs(spec.theta) >= 1.0)
    throw UnstableAR("|theta| >= 1 is non-stationary");

  if (!sub_part.empty()) spec.subordination = parse_subordination(sub_part);
  return spec;
}

std::string to_string(const ProcessSpec& spec) {
  std::ostringstream out;
  switch (spec.family) {
    case ProcessFamily::Iid: out << "iid("; break;
    case ProcessFamily::Ar1: out << "ar1(theta=" << spec.theta << ","; break;
    case ProcessFamily::Ma1: out << "ma1(theta=" << spec.theta << ","; break;
  }
  out << "innov=";
  switch (spec.innovation) {
    case Innovation::Gaussian: out << "gaussian"; break;
    case Innovation::LognormalCentered: out << "lognormal"; break;
    case Innovation::Chi2One: out << "chi2_1"; break;
    case Innovation::ExpOne: out << "exp_1"; break;
    case Innovation::StudentT: out << "student_t(" << spec.t_dof << ")"; break;
    case Innovation::Cauchy: out << "cauchy"; break;
  }
  if (spec.family == ProcessFamily::Ar1 && spec.burn_in != 1000)
    out << ",burnin=" << spec.burn_in;
  out << ")";
  switch (spec.subordination.marginal) {
    case Marginal::None: break;
    case Marginal::Pareto: out << "|subordinate(pareto(" << spec.subordination.a << "," << spec.subordination.b << "))"; break;
    case Marginal::Laplace: out << "|subordinate(laplace(" << spec.subordination.a << "," << spec.subordination.b << "))"; break;
    case Marginal::Logistic: out << "|subordinate(logistic(" << spec.subordination.a << "," << spec.subordination.b << "))"; break;
    case Marginal::Cauchy: out << "|subordinate(cauchy(" << spec.subordination.a << "," << spec.subordination.b << "))"; break;
    case Marginal::Gaussian: out << "|subordinate(gaussian)"; break;
  }
  return out.str();
}

}  // namespace ordsym
