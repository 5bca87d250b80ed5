#include "cyclo/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <json.hpp>

namespace cyclo {

namespace {

constexpr int kCompareLimit = 7;

template <class Fn>
double median_ms(int repetitions, Fn&& fn) {
  std::vector<double> t;
  for (int i = 0; i < repetitions; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    t.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

BenchTable bench_run(const FieldPtr& ctx, int n_max, std::uint64_t seed, int repetitions) {
  if (n_max < 4) throw Error(ErrorCode::Unsupported, "bench needs n_max >= 4");
  if (repetitions < 1) throw Error(ErrorCode::Unsupported, "bench needs at least one repetition");
  BenchTable table{ctx, seed, {}};
  for (int n = 4; n <= n_max; ++n) {
    BenchRow row;
    row.n = n;
    row.degree = euler_phi(std::uint64_t{5} << n);
    ExplicitFactorization ef;
    row.explicit_ms = median_ms(repetitions, [&] { ef = factor_explicit(ctx, n); });
    std::vector<Poly> generic;
    row.oracle_ms = median_ms(repetitions, [&] { generic = factorize(cyclotomic(ctx, std::uint64_t{5} << n), seed).distinct(); });
    row.ratio = row.explicit_ms > 0 ? row.oracle_ms / row.explicit_ms : 0;
    if (n <= kCompareLimit) row.equal = generic == ef.factors;
    table.rows.push_back(row);
  }
  return table;
}

std::string emit(const BenchTable& table, Format format) {
  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["q"] = table.ctx->is_prime_field() ? nlohmann::ordered_json(table.ctx->q()) : nlohmann::ordered_json(q_label(*table.ctx));
    j["seed"] = table.seed;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
      nlohmann::ordered_json item;
      item["n"] = r.n;
      item["degree"] = r.degree;
      item["explicit_ms"] = r.explicit_ms;
      item["oracle_ms"] = r.oracle_ms;
      item["ratio"] = r.ratio;
      item["equal"] = r.equal ? nlohmann::ordered_json(*r.equal) : nlohmann::ordered_json(nullptr);
      rows.push_back(std::move(item));
    }
    j["rows"] = std::move(rows);
    return j.dump() + "\n";
  }
  std::string out = "q=" + q_label(*table.ctx) + " seed=" + std::to_string(table.seed) + "\n";
  out += "n\tdegree\texplicit_ms\toracle_ms\tratio\tequal\n";
  for (const auto& r : table.rows) {
    out += std::to_string(r.n) + "\t" + std::to_string(r.degree) + "\t" + fixed(r.explicit_ms, 3) + "\t" +
           fixed(r.oracle_ms, 3) + "\t" + fixed(r.ratio, 2) + "\t" + (r.equal ? (*r.equal ? "yes" : "NO") : "-") + "\n";
  }
  return out;
}

}  // namespace cyclo
