#pragma once

// Generating-function identities relating S(z) = sum s(n) z^n and
// T(z) = sum t(n) z^n, checked coefficient by coefficient at a finite order.
//
// Identities with denominators are checked in cleared-denominator form; only
// the derived series U, G and H are produced by actual series division.
// Throughout, B_i(z) = 1 + z^{2^i} + z^{2^{i+1}} and P_e = B_0 B_1 ... B_{e-1}.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "stern/bigint.hpp"
#include "stern/zseries.hpp"

namespace diatomic::idcat {

/// Catalog entries. The wire names (see name()) are the identifiers used by
/// the CLI and in JSON reports.
enum class IdentityId {
  stern_functional,    // S(z^2) (1+z+z^2) = z S(z)
  twisted_functional,  // T(z^2) (1+z+z^2) = -z (T(z) - 2z)
  twisted_iterated,    // T(z^{2^e}) in terms of T(z), cleared by P_e
  bacher_product,      // z (1 + z^{2^e}) P_e = (-1)^e sum_{n<=3*2^e} t(3*2^e+n) z^n
  partial_sum,         // sum_{n<=3*2^e} t(n) z^n, first closed form
  partial_sum_closed,  // the same partial sum, second closed form
  ratio_ts,            // T(z^{2^e})/S(z^{2^e}) in terms of T(z)/S(z)
  twisted_tail,        // sum t(3*2^e+n) z^n = (-1)^e S(z) U(z^{2^e})
  stern_difference,    // sum (s(2^{e+1}+n) - s(2^e+n)) z^n = G(z^{2^e}) S(z)
  twisted_sum,         // (-1)^{e+1} sum (t(2^{e+1}+n) + t(2^e+n)) z^n = H(z^{2^e}) S(z)
  product_stern_sums,  // z P_k = sum_{n<=2^k} s(n) z^n + sum_{n<2^k} s(2^k-n) z^{n+2^k}
  pointwise_relations, // t/s relations on 2^e < m <= 3*2^e
};

std::string_view name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view text);

/// Every identity in canonical report order.
std::span<const IdentityId> all_identities();

/// True when the identity takes no e/k parameter.
bool is_unparameterized(IdentityId id);
/// Smallest admissible e (or k).
std::size_t min_param(IdentityId id);
/// Smallest order at which the identity can be checked; for the exact
/// polynomial identities this covers every nonzero term.
std::size_t min_order(IdentityId id, std::size_t e);
/// Number of sequence values a Catalog needs to check the identity.
std::size_t required_capacity(IdentityId id, std::size_t e, std::size_t order);

enum class Status { pass, fail };

struct Params {
  std::optional<std::size_t> e;  // e, or k for product_stern_sums
  std::size_t order = 0;
};

struct Report {
  IdentityId id{};
  Params params;
  Status status = Status::pass;
  std::optional<Mismatch> mismatch;  // present iff status == fail
  std::size_t effective_order = 0;   // coefficients (or points) actually compared

  bool passed() const { return status == Status::pass; }
};

/// Prefix tables of s and t that every series and verifier reads from.
/// Entries can be overwritten to check that the verifiers notice corruption.
class SequenceTables {
 public:
  static SequenceTables compute(std::size_t length);

  std::size_t size() const { return s_.size(); }
  const Integer& s(std::size_t n) const;
  const Integer& t(std::size_t n) const;
  void set_s(std::size_t n, Integer v);
  void set_t(std::size_t n, Integer v);

 private:
  std::vector<Integer> s_;
  std::vector<Integer> t_;
};

/// P_e truncated at order n (P_0 = 1).
ZSeries prod_B(std::size_t e, std::size_t n);

class Catalog {
 public:
  explicit Catalog(SequenceTables tables) : tables_(std::move(tables)) {}
  static Catalog with_capacity(std::size_t length) {
    return Catalog(SequenceTables::compute(length));
  }

  const SequenceTables& tables() const { return tables_; }

  ZSeries gen_S(std::size_t n) const;
  ZSeries gen_T(std::size_t n) const;
  /// U = (sum_{n>=0} t(3+n) z^n) / S(z), order n.
  ZSeries gen_U(std::size_t n) const;
  /// G = (sum_{n>=0} (s(2+n) - s(1+n)) z^n) / S(z), order n.
  ZSeries gen_G(std::size_t n) const;
  /// H = -(sum_{n>=0} (t(2+n) + t(1+n)) z^n) / S(z), order n.
  ZSeries gen_H(std::size_t n) const;

  Report verify_functional_s(std::size_t n) const;
  Report verify_functional_t(std::size_t n) const;
  Report verify_t_iterated(std::size_t e, std::size_t n) const;
  Report verify_bacher_product(std::size_t e, std::size_t n) const;
  Report verify_partial_sum(std::size_t e, std::size_t n) const;
  Report verify_partial_sum_closed(std::size_t e, std::size_t n) const;
  Report verify_ratio_ts(std::size_t e, std::size_t n) const;
  Report verify_twisted_tail(std::size_t e, std::size_t n) const;
  Report verify_stern_difference(std::size_t e, std::size_t n) const;
  Report verify_twisted_sum(std::size_t e, std::size_t n) const;
  Report verify_product_stern_sums(std::size_t k, std::size_t n) const;
  Report verify_pointwise_relations(std::size_t e) const;

  /// Dispatches on id. e is ignored for unparameterized identities.
  Report verify(IdentityId id, std::size_t e, std::size_t n) const;

 private:
  // sum_{j<count} seq(start + j) z^j at order n.
  ZSeries window_s(std::size_t start, std::size_t count, std::size_t n) const;
  ZSeries window_t(std::size_t start, std::size_t count, std::size_t n) const;

  SequenceTables tables_;
};

/// Checks one identity against freshly computed tables of sufficient size.
Report verify(IdentityId id, std::size_t e, std::size_t n);

}  // namespace diatomic::idcat
