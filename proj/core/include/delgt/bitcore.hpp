#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "delgt/errors.hpp"

namespace delgt {

/// Dense binary vector packed into 64-bit words. Immutable by convention once
/// built; no operation below mutates its inputs. Lengths >= 0 including 0 are
/// legal everywhere, and all indices in this library are 0-based.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n, bool fill = false);

  /// Parses a string of '0'/'1' characters.
  static BitVec from_string(std::string_view zero_one);
  static BitVec from_bits(std::initializer_list<int> bits);

  std::size_t size() const noexcept { return nbits_; }
  bool empty() const noexcept { return nbits_ == 0; }

  bool get(std::size_t i) const {
    if (i >= nbits_) throw ContractViolation("BitVec::get: index out of range");
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i, bool v) {
    if (i >= nbits_) throw ContractViolation("BitVec::set: index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void push_back(bool v);
  /// Appends `count` copies of the symbol `v`.
  void append_run(bool v, std::size_t count);

  std::size_t weight() const noexcept;

  /// True iff this <= other elementwise. Lengths must match.
  bool covered_by(const BitVec& other) const;

  BitVec operator|(const BitVec& other) const;
  BitVec complement() const;

  /// Copies bits [start, start+len).
  BitVec slice(std::size_t start, std::size_t len) const;

  /// 64 bits starting at `pos`; bits past the end read as zero.
  std::uint64_t window64(std::size_t pos) const noexcept;

  bool operator==(const BitVec& other) const noexcept {
    return nbits_ == other.nbits_ && words_ == other.words_;
  }

  std::string to_string() const;
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;

  void mask_tail() noexcept;
};

/// m x n binary matrix. Rows are pooled tests, columns are item signatures.
/// Both row and column views are materialized at construction so either axis
/// has O(1) bit access; the matrix is immutable after it is built.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<BitVec>& rows);
  static BitMatrix from_row_strings(std::initializer_list<std::string_view> rows);

  std::size_t rows() const noexcept { return nrows_; }
  std::size_t cols() const noexcept { return ncols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }
  void set(std::size_t r, std::size_t c, bool v) {
    rows_.at(r).set(c, v);
    cols_.at(c).set(r, v);
  }

  const BitVec& row(std::size_t r) const { return rows_.at(r); }
  const BitVec& column(std::size_t c) const { return cols_.at(c); }

  bool operator==(const BitMatrix& other) const noexcept {
    return nrows_ == other.nrows_ && ncols_ == other.ncols_ && rows_ == other.rows_;
  }

  bool has_duplicate_columns() const;

 private:
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::vector<BitVec> rows_;
  std::vector<BitVec> cols_;
};

/// Sorted set of item indices inside a universe of n items.
class DefectiveSet {
 public:
  DefectiveSet() = default;
  /// Sorts the indices; throws on duplicates or indices >= universe.
  DefectiveSet(std::vector<std::size_t> indices, std::size_t universe);

  static DefectiveSet empty_set(std::size_t universe) { return DefectiveSet({}, universe); }

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool contains(std::size_t item) const;

  bool operator==(const DefectiveSet& other) const noexcept {
    return universe_ == other.universe_ && indices_ == other.indices_;
  }

 private:
  std::vector<std::size_t> indices_;
  std::size_t universe_ = 0;
};

/// OR of the columns of `a` selected by `s`. Empty selection gives the zero
/// vector of length a.rows().
BitVec or_columns(const BitMatrix& a, const DefectiveSet& s);

/// Subsequence of v with the positions in `sorted_deletions` removed, order
/// preserved. The deletion set must be strictly increasing and in range.
BitVec delete_indices(const BitVec& v, std::span<const std::size_t> sorted_deletions);

std::size_t weight(const BitVec& v);

struct Run {
  int symbol;
  std::size_t length;
  bool operator==(const Run&) const = default;
};

/// Maximal-run decomposition; concatenating the runs reproduces v.
std::vector<Run> runs(const BitVec& v);

// Text formats. Matrix: first line "m n", then m lines of exactly n
// characters from {0,1}. Vector: one line of {0,1} characters.
void write_matrix(std::ostream& out, const BitMatrix& a);
BitMatrix read_matrix(std::istream& in);
void write_matrix_file(const std::string& path, const BitMatrix& a);
BitMatrix read_matrix_file(const std::string& path);

void write_vector(std::ostream& out, const BitVec& v);
BitVec read_vector(std::istream& in);
void write_vector_file(const std::string& path, const BitVec& v);
BitVec read_vector_file(const std::string& path);

}  // namespace delgt
