// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stern/idcat.hpp"
#include "stern/seqcore.hpp"

using namespace diatomic;
using idcat::IdentityId;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string cell(const idcat::Report& r) {
  std::string s(idcat::name(r.id));
  if (r.params.e) s += " e=" + std::to_string(*r.params.e);
  s += " N=" + std::to_string(r.params.order);
  if (r.mismatch) s += " mismatch at " + std::to_string(r.mismatch->index);
  return s;
}

void expect_pass(Outcome& out, const idcat::Report& r) {
  if (!r.passed()) out.fail(cell(r));
}

// Tables large enough for every grid cell below (t(3*2^12) is the largest index
// outside the tail and difference identities, which need N + 3*2^8).
const idcat::Catalog& catalog() {
  static const idcat::Catalog c = idcat::Catalog::with_capacity(16384);
  return c;
}

Outcome twisted_tail_grid() {
  Outcome out;
  for (std::size_t e = 0; e <= 8; ++e) expect_pass(out, catalog().verify_twisted_tail(e, 4096));
  return out;
}

Outcome difference_and_sum_grid() {
  Outcome out;
  for (std::size_t e = 0; e <= 8; ++e) {
    expect_pass(out, catalog().verify_stern_difference(e, 4096));
    expect_pass(out, catalog().verify_twisted_sum(e, 4096));
  }
  return out;
}

Outcome lemma_suite() {
  Outcome out;
  const auto& c = catalog();
  expect_pass(out, c.verify_functional_s(8192));
  expect_pass(out, c.verify_functional_t(8192));
  for (std::size_t e = 1; e <= 6; ++e) {
    expect_pass(out, c.verify_t_iterated(e, 4096));
    expect_pass(out, c.verify_ratio_ts(e, 4096));
    expect_pass(out, c.verify_bacher_product(e, idcat::min_order(IdentityId::bacher_product, e)));
    expect_pass(out, c.verify_partial_sum(e, idcat::min_order(IdentityId::partial_sum, e)));
    expect_pass(out, c.verify_partial_sum_closed(
                         e, idcat::min_order(IdentityId::partial_sum_closed, e)));
  }
  for (std::size_t k = 0; k <= 10; ++k)
    expect_pass(out, c.verify_product_stern_sums(
                         k, idcat::min_order(IdentityId::product_stern_sums, k)));
  for (std::size_t e = 1; e <= 12; ++e) expect_pass(out, c.verify_pointwise_relations(e));
  return out;
}

Outcome cross_method() {
  Outcome out;
  const std::size_t limit = std::size_t{1} << 16;
  const auto s = stern_range(limit);
  const auto t = twisted_range(limit);
  for (std::size_t n = 2; n < limit && out.ok; ++n) {
    if (stern(n) != s[n]) out.fail("stern(" + std::to_string(n) + ")");
    if (twisted(n) != t[n]) out.fail("twisted(" + std::to_string(n) + ")");
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(20240601);
  for (int i = 0; i < 500 && out.ok; ++i) {
    const Integer n = rng.get_z_bits(1024);
    if (n == 0) continue;
    if (stern(n) != stern_pair(n).first) out.fail("stern_pair disagreement at sample " + std::to_string(i));
  }
  return out;
}

Outcome enumeration() {
  Outcome out;
  const std::size_t count = std::size_t{1} << 16;
  const auto s = stern_range(count + 2);
  std::set<std::pair<Integer, Integer>> seen;
  for (std::size_t n = 1; n <= count && out.ok; ++n) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), s[n + 1].get_mpz_t(), s[n].get_mpz_t());
    if (g != 1) out.fail("not reduced at n=" + std::to_string(n));
    if (!seen.emplace(s[n + 1], s[n]).second) out.fail("repeat at n=" + std::to_string(n));
  }
  return out;
}

Outcome tail_constant_term() {
  Outcome out;
  const auto t = twisted_range(3 * (std::size_t{1} << 20) + 1);
  for (std::size_t e = 0; e <= 20; ++e)
    if (t[3 * (std::size_t{1} << e)] != 0) out.fail("t(3*2^" + std::to_string(e) + ") != 0");
  return out;
}

Outcome mutation_sensitivity() {
  Outcome out;
  const auto clean = idcat::SequenceTables::compute(4096);
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> delta(-5, 5);
  for (int trial = 0; trial < 100 && out.ok; ++trial) {
    auto tables = clean;
    const std::size_t idx = rng() % 512;
    int d = 0;
    while (d == 0) d = delta(rng);
    const bool on_s = (rng() & 1) != 0;
    if (on_s)
      tables.set_s(idx, tables.s(idx) + d);
    else
      tables.set_t(idx, tables.t(idx) + d);
    const idcat::Catalog c(std::move(tables));

    // A verifier that throws (e.g. a corrupted series no longer divisible by
    // S(z)) counts as a failure.
    const std::vector<std::function<idcat::Report()>> suite = {
        [&] { return c.verify_functional_s(1024); },
        [&] { return c.verify_functional_t(1024); },
        [&] { return c.verify_twisted_tail(1, 1024); },
        [&] { return c.verify_stern_difference(1, 1024); },
        [&] { return c.verify_twisted_sum(1, 1024); },
    };
    bool caught = false;
    for (const auto& check : suite) {
      try {
        caught = !check().passed();
      } catch (const std::exception&) {
        caught = true;
      }
      if (caught) break;
    }
    if (!caught)
      out.fail(std::string(on_s ? "s" : "t") + "[" + std::to_string(idx) + "] corruption undetected");
  }
  return out;
}

Outcome performance() {
  Outcome out;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(7);
  const unsigned bits = 1u << 20;
  Integer n = rng.get_z_bits(bits);
  mpz_setbit(n.get_mpz_t(), bits - 1);

  const auto start = std::chrono::steady_clock::now();
  const Integer value = stern(n);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60.0) out.fail("stern took " + std::to_string(secs) + " s");
  if (value != stern_pair(n).first) out.fail("result disagrees with stern_pair");
  out.detail = out.ok ? "stern(n) in " + std::to_string(secs) + " s, " +
                            std::to_string(mpz_sizeinbase(value.get_mpz_t(), 2)) + "-bit value"
                      : out.detail;
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    Outcome (*run)();
    double budget_s;  // 0 = no timing requirement
  };
  const Criterion criteria[] = {
      {"1 twisted tail identity (thm_1_1), e=0..8, N=4096", twisted_tail_grid, 60.0},
      {"2 difference/sum identities (thm_1_2_i, thm_1_2_ii), e=0..8, N=4096", difference_and_sum_grid, 0.0},
      {"3 lemma suite", lemma_suite, 0.0},
      {"4 cross-method equality (matrix vs recurrence, matrix vs pair)", cross_method, 0.0},
      {"5 first 2^16 rationals reduced and distinct", enumeration, 0.0},
      {"6 t(3*2^e) = 0 for e <= 20", tail_constant_term, 0.0},
      {"7 mutation sensitivity, 100 corruptions", mutation_sensitivity, 0.0},
      {"8 stern(n) for a 2^20-bit n under 60 s", performance, 0.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) o.fail("exceeded " + std::to_string(c.budget_s) + " s");
    std::printf("[%s] %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.label, secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    if (!o.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
