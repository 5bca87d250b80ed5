#include "cyclo/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <ostream>

#include "cyclo/bench.hpp"
#include "cyclo/emit.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {

namespace {

constexpr const char* kBadQ = "q must be an odd prime power coprime to 10";

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError("not a non-negative integer: '" + std::string(s) + "'");
  return v;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError("not an integer: '" + std::string(s) + "'");
  return v;
}

// q must also be coprime to r.
FieldPtr open_field(const RunConfig& cfg) {
  const auto spec = parse_q(cfg.q);
  if (cfg.r == 5 && spec.p == 5) throw UsageError(kBadQ);
  if (cfg.r % spec.p == 0) throw UsageError("q must be coprime to 2r");
  return FieldContext::make(spec.p, spec.m);
}

Format format_of(const RunConfig& cfg) { return cfg.format == "json" ? Format::Json : Format::Text; }

Poly parse_poly(const FieldPtr& ctx, std::string_view text) {
  std::vector<Coeff> c;
  while (true) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto v = parse_int(item);
    // Values in [0, q) are field encodings; anything else is read in the prime subfield.
    c.push_back(v >= 0 && static_cast<std::uint64_t>(v) < ctx->q() ? static_cast<Coeff>(v) : ctx->from_int(v).value());
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Poly(ctx, std::move(c));
}

int report_verification(const ExplicitFactorization& ef, const RunConfig& cfg, std::ostream& err) {
  VerifyOptions options;
  options.order_degree_limit = cfg.order_limit;
  const auto report = verify_factorization(ef, options);
  if (report.passed()) {
    err << "verified: product, irreducibility, count, degree"
        << (report.order_checked ? ", order" : " (order skipped above degree limit)") << "\n";
    return 0;
  }
  for (const auto& f : report.failures) err << "verification failed: " << f << "\n";
  return 1;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.subcommand == "factor" || cfg.subcommand == "lift") {
    const auto ctx = open_field(cfg);
    const auto ef = cfg.subcommand == "factor" && cfg.r == 5 ? factor_explicit(ctx, cfg.n)
                                                              : lift_general(ctx, cfg.r, cfg.n, cfg.seed);
    out << emit(ef, format_of(cfg));
    return cfg.verify ? report_verification(ef, cfg, err) : 0;
  }
  if (cfg.subcommand == "irreducible") {
    const auto ctx = open_field(cfg);
    out << emit(sparse_family(ctx, cfg.n, cfg.family, true), format_of(cfg));
    return 0;
  }
  if (cfg.subcommand == "oracle") {
    const auto spec = parse_q(cfg.q);
    const auto ctx = FieldContext::make(spec.p, spec.m);
    const auto f = parse_poly(ctx, cfg.poly);
    if (f.is_zero()) throw UsageError("--poly must be a nonzero polynomial");
    out << emit(factorize(f, cfg.seed), format_of(cfg));
    return 0;
  }
  if (cfg.subcommand == "bench") {
    const auto ctx = open_field(cfg);
    out << emit(bench_run(ctx, cfg.n_max, cfg.seed, cfg.repetitions), format_of(cfg));
    return 0;
  }
  throw UsageError("unknown subcommand");
}

}  // namespace

QSpec parse_q(std::string_view text) {
  QSpec spec;
  const auto caret = text.find('^');
  try {
    if (caret == std::string_view::npos) {
      const auto q = parse_uint(text);
      if (q < 3) throw UsageError(kBadQ);
      const auto f = nt::factorize(q);
      if (f.size() != 1) throw UsageError(kBadQ);
      spec.p = f.front().first;
      spec.m = static_cast<unsigned>(f.front().second);
    } else {
      spec.p = parse_uint(text.substr(0, caret));
      const auto m = parse_uint(text.substr(caret + 1));
      if (m < 1 || m > 64 || !nt::is_prime(spec.p)) throw UsageError(kBadQ);
      spec.m = static_cast<unsigned>(m);
    }
  } catch (const UsageError&) {
    throw UsageError(kBadQ);
  }
  if (spec.p == 2) throw UsageError(kBadQ);
  return spec;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit factorization of cyclotomic polynomials Q_{2^n r} over finite fields", "cyclofact"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_q = [&](CLI::App* sub) { sub->add_option("--q", cfg.q, "field size: p, p^m or a prime power")->required(); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", cfg.seed, "seed for randomized splitting"); };
  const auto odd = CLI::Validator(
      [](std::string& s) -> std::string {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || v % 2 == 0) return "r must be an odd positive integer";
        return {};
      },
      "ODD");

  auto* factor = app.add_subcommand("factor", "factor Q_{2^n r}");
  add_q(factor);
  factor->add_option("--n", cfg.n, "level n")->required()->check(CLI::NonNegativeNumber);
  factor->add_option("--r", cfg.r, "odd part r (closed forms for r = 5)")->check(odd);
  factor->add_flag("--verify", cfg.verify, "check product, irreducibility, count, degree and order");
  factor->add_option("--order-limit", cfg.order_limit, "largest factor degree whose order is checked")
      ->check(CLI::NonNegativeNumber);
  add_format(factor);
  add_seed(factor);

  auto* irreducible = app.add_subcommand("irreducible", "sparse irreducible polynomials of degree 2^(n-2)");
  add_q(irreducible);
  irreducible->add_option("--n", cfg.n, "level n")->required()->check(CLI::NonNegativeNumber);
  irreducible->add_option("--family", cfg.family, "auto or a family id");
  add_format(irreducible);

  auto* oracle = app.add_subcommand("oracle", "generic factorization of one polynomial");
  add_q(oracle);
  oracle->add_option("--poly", cfg.poly, "comma-separated ascending coefficients")->required();
  add_format(oracle);
  add_seed(oracle);

  auto* lift = app.add_subcommand("lift", "factor Q_{2^n r} by lifting an oracle factorization");
  add_q(lift);
  lift->add_option("--r", cfg.r, "odd part r")->required()->check(odd);
  lift->add_option("--n", cfg.n, "level n")->required()->check(CLI::NonNegativeNumber);
  lift->add_flag("--verify", cfg.verify, "check product, irreducibility, count, degree and order");
  lift->add_option("--order-limit", cfg.order_limit, "largest factor degree whose order is checked")
      ->check(CLI::NonNegativeNumber);
  add_format(lift);
  add_seed(lift);

  auto* bench = app.add_subcommand("bench", "time closed forms against the generic oracle");
  add_q(bench);
  bench->add_option("--n-max", cfg.n_max, "largest level")->required()->check(CLI::Range(4, 26));
  bench->add_option("--reps", cfg.repetitions, "repetitions per timing")->check(CLI::Range(1, 99));
  add_format(bench);
  add_seed(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    return dispatch(cfg, out, err);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::NotIrreducible ? 1 : 2;
  }
}

}  // namespace cyclo
