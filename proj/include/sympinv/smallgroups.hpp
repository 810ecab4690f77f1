#pragma once

// Exhaustive small symplectic groups Sp(2n, q) over the standard form, their
// conjugacy classes, and brute-force oracles.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sympinv/classify.hpp"

namespace sympinv {

inline constexpr std::uint64_t kGroupElementCap = 10'000'000;

/// q^{n^2} prod_{i=1..n} (q^{2i} - 1), saturating at UINT64_MAX.
std::uint64_t symplectic_group_order(int n, std::int64_t q);

/// Elements are packed as byte strings of row-major residues.
using Packed = std::string;

class GroupTable : public Oracle {
 public:
  /// Breadth-first closure from standard generators; throws BudgetExceeded
  /// when the order exceeds cap.
  GroupTable(int n, std::int64_t q, std::uint64_t cap = kGroupElementCap);

  int n() const { return n_; }
  std::int64_t q() const { return q_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return static_cast<std::size_t>(2 * n_); }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Mat>& generators() const { return generators_; }
  const std::vector<Packed>& elements() const { return elements_; }

  Packed pack(const Mat& a) const;
  Mat unpack(const Packed& p) const;
  std::optional<std::size_t> index_of(const Mat& a) const;
  bool contains(const Mat& a) const { return index_of(a).has_value(); }

  /// Elements with square I and with square -I.
  const std::vector<std::size_t>& involutions() const { return involutions_; }
  const std::vector<std::size_t>& skew_involutions() const { return skew_involutions_; }

  /// Class id per element, computed on first use.
  std::size_t class_of(std::size_t element) const;
  std::size_t class_count() const;
  /// Canonical (lexicographically least) representative of a class.
  std::size_t class_representative(std::size_t cls) const;
  std::uint64_t class_size(std::size_t cls) const;

  bool covers(const Field& f, std::size_t dim) const override;
  std::optional<std::pair<Mat, Mat>> product(const Mat& phi, int e1, int e2) const override;
  std::optional<Mat> conjugate(const Mat& phi, const Mat& psi) const override;

 private:
  void mul(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const;
  Packed mul(const Packed& a, const Packed& b) const;
  std::size_t require(const Mat& a) const;
  void compute_classes() const;

  int n_;
  std::int64_t q_;
  Field field_;
  std::vector<Mat> generators_;
  std::vector<Packed> elements_;
  std::unordered_map<Packed, std::size_t> index_;
  std::vector<std::size_t> involutions_, skew_involutions_;
  // Conjugacy data: class id, and a with a^{-1} rep a = element.
  mutable std::vector<std::uint32_t> class_id_, conj_from_rep_;
  mutable std::vector<std::size_t> reps_;
  mutable std::vector<std::uint64_t> sizes_;
};

struct ClassRecord {
  std::size_t class_id;
  Mat representative{Field::rational(), 0, 0};
  std::uint64_t size;
  std::uint64_t element_order;
  std::vector<ElementaryDivisor> elementary_divisors;
  bool is_involution, is_skew_involution;
  Verdict reversible, bireflectional, two_skew, inv_skew, psp_rev_not_biref;
};

/// One record per class with verdicts from classify, using the table as the
/// oracle; jobs worker threads, deterministic output.
std::vector<ClassRecord> conjugacy_classes(const GroupTable& g, const ClassifyOptions& opt = {}, unsigned jobs = 1);

std::uint64_t element_order(const Mat& a);
std::string elementary_divisors_to_string(const std::vector<ElementaryDivisor>& eds);
std::string serialize_compact(const Mat& a);
/// Class-table CSV with a header row.
std::string class_table_csv(const std::vector<ClassRecord>& classes);

/// Random elements of Sp(2n, q) for groups beyond the cap.
std::vector<Mat> sample_elements(int n, std::int64_t q, std::size_t count, Rng& rng);

}  // namespace sympinv
