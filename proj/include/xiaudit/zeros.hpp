#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "xiaudit/ball.hpp"
#include "xiaudit/special.hpp"

namespace xiaudit {

/// One nontrivial zero rho = 1/2 + delta + i beta, beta > 0.
struct ZeroEntry {
  std::size_t index = 0;  ///< 1-based ordinal by ascending beta
  RealBall beta;
  RealBall delta;  ///< exactly zero for tabulated (on-line) zeros
  enum class Source { table, refined } source = Source::table;
};

/// Ordered table of zeros with the on-line / off-line partition.
class ZeroCatalog {
 public:
  ZeroCatalog() = default;
  ZeroCatalog(std::vector<ZeroEntry> entries, double table_accuracy,
              std::string source_descriptor);

  const std::vector<ZeroEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Indices of on-line zeros (delta exactly zero), ascending beta.
  const std::vector<std::size_t>& omega1() const { return omega1_; }
  /// Indices of off-line zeros (delta > 0).
  const std::vector<std::size_t>& omega2() const { return omega2_; }

  double table_accuracy() const { return table_accuracy_; }
  const std::string& source_descriptor() const { return source_descriptor_; }

  /// Largest tabulated ordinate; throws EmptyCatalog when empty.
  const RealBall& cutoff() const;

  /// Catalog truncated to its first n entries.
  ZeroCatalog truncated(std::size_t n) const;

  /// Catalog with one entry replaced (index field must match).
  ZeroCatalog with_entry_replaced(const ZeroEntry& e) const;

 private:
  void validate_and_partition();

  std::vector<ZeroEntry> entries_;
  std::vector<std::size_t> omega1_;
  std::vector<std::size_t> omega2_;
  double table_accuracy_ = 5e-10;
  std::string source_descriptor_;
};

/// Parse a plain-text ordinate table: one decimal ordinate per line,
/// optionally preceded by an integer index; '#' starts a comment.
/// Each beta becomes a ball of radius declared_accuracy.
ZeroCatalog parse_zero_table(std::istream& in, double declared_accuracy,
                             const std::string& descriptor = "stream");
ZeroCatalog parse_zero_table_file(const std::string& path,
                                  double declared_accuracy);

/// Shrink one on-line zero's radius to target_radius with a certified
/// sign-change bracket of xi(1/2 + i t).  Idempotent when already at
/// target.  Throws NoSignChange when the bracket fails to isolate a zero.
ZeroEntry refine_zero(const ZeroEntry& entry, double target_radius,
                      Prec max_precision_bits = kPrecisionCap);

struct CountCheck {
  std::size_t counted = 0;
  RealBall main_term;
  bool within_slack = true;  ///< |counted - main_term| <= slack_c * log T
};

/// Zero count below T against the counting-function main term
/// (T/2pi) log(T/2pi) - T/2pi.
CountCheck count_vs_formula(const ZeroCatalog& catalog, const RealBall& T,
                            double slack_c = 2.0);

/// Versioned cache with CRC trailer; lossless round trip.
void save_catalog(const ZeroCatalog& catalog, const std::string& path);
ZeroCatalog load_catalog(const std::string& path);

/// True when the file begins with the cache magic (vs a plain text table).
bool is_catalog_cache_file(const std::string& path);

}  // namespace xiaudit
