#include "delgt/bitcore.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace delgt {

namespace {
constexpr std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }
}  // namespace

BitVec::BitVec(std::size_t n, bool fill)
    : nbits_(n), words_(word_count(n), fill ? ~std::uint64_t{0} : 0) {
  mask_tail();
}

void BitVec::mask_tail() noexcept {
  const std::size_t rem = nbits_ & 63;
  if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

BitVec BitVec::from_string(std::string_view zero_one) {
  BitVec v(zero_one.size());
  for (std::size_t i = 0; i < zero_one.size(); ++i) {
    const char c = zero_one[i];
    if (c == '1')
      v.set(i, true);
    else if (c != '0')
      throw ParseError("BitVec::from_string: character is not 0 or 1");
  }
  return v;
}

BitVec BitVec::from_bits(std::initializer_list<int> bits) {
  BitVec v(bits.size());
  std::size_t i = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw ContractViolation("BitVec::from_bits: entry is not 0 or 1");
    v.set(i++, b == 1);
  }
  return v;
}

void BitVec::push_back(bool v) {
  const std::size_t i = nbits_++;
  if (word_count(nbits_) > words_.size()) words_.push_back(0);
  if (v) words_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void BitVec::append_run(bool v, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) push_back(v);
}

std::size_t BitVec::weight() const noexcept {
  std::size_t acc = 0;
  for (std::uint64_t w : words_) acc += static_cast<std::size_t>(std::popcount(w));
  return acc;
}

bool BitVec::covered_by(const BitVec& other) const {
  if (nbits_ != other.nbits_)
    throw ContractViolation("BitVec::covered_by: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

BitVec BitVec::operator|(const BitVec& other) const {
  if (nbits_ != other.nbits_) throw ContractViolation("BitVec::operator|: length mismatch");
  BitVec out(nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
  return out;
}

BitVec BitVec::complement() const {
  BitVec out(nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.mask_tail();
  return out;
}

BitVec BitVec::slice(std::size_t start, std::size_t len) const {
  if (start + len > nbits_) throw ContractViolation("BitVec::slice: range out of bounds");
  BitVec out(len);
  for (std::size_t w = 0; w * 64 < len; ++w) {
    out.words_[w] = window64(start + w * 64);
  }
  out.mask_tail();
  return out;
}

std::uint64_t BitVec::window64(std::size_t pos) const noexcept {
  if (pos >= nbits_) return 0;
  const std::size_t idx = pos >> 6;
  const std::size_t off = pos & 63;
  std::uint64_t w = words_[idx] >> off;
  if (off != 0 && idx + 1 < words_.size()) w |= words_[idx + 1] << (64 - off);
  return w;
}

std::string BitVec::to_string() const {
  std::string s(nbits_, '0');
  for (std::size_t i = 0; i < nbits_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : nrows_(rows), ncols_(cols), rows_(rows, BitVec(cols)), cols_(cols, BitVec(rows)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVec>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (const BitVec& r : rows)
    if (r.size() != ncols) throw ContractViolation("BitMatrix::from_rows: ragged rows");
  BitMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < ncols; ++c)
      if (rows[r].get(c)) m.set(r, c, true);
  return m;
}

BitMatrix BitMatrix::from_row_strings(std::initializer_list<std::string_view> rows) {
  std::vector<BitVec> parsed;
  parsed.reserve(rows.size());
  for (std::string_view s : rows) parsed.push_back(BitVec::from_string(s));
  return from_rows(parsed);
}

bool BitMatrix::has_duplicate_columns() const {
  std::vector<const BitVec*> ptrs;
  ptrs.reserve(ncols_);
  for (const BitVec& c : cols_) ptrs.push_back(&c);
  std::sort(ptrs.begin(), ptrs.end(),
            [](const BitVec* a, const BitVec* b) { return a->words() < b->words(); });
  for (std::size_t i = 1; i < ptrs.size(); ++i)
    if (*ptrs[i - 1] == *ptrs[i]) return true;
  return false;
}

DefectiveSet::DefectiveSet(std::vector<std::size_t> indices, std::size_t universe)
    : indices_(std::move(indices)), universe_(universe) {
  std::sort(indices_.begin(), indices_.end());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] >= universe_)
      throw ContractViolation("DefectiveSet: index out of universe");
    if (i > 0 && indices_[i] == indices_[i - 1])
      throw ContractViolation("DefectiveSet: duplicate index");
  }
}

bool DefectiveSet::contains(std::size_t item) const {
  return std::binary_search(indices_.begin(), indices_.end(), item);
}

BitVec or_columns(const BitMatrix& a, const DefectiveSet& s) {
  BitVec acc(a.rows());
  for (std::size_t i : s.indices()) {
    if (i >= a.cols()) throw ContractViolation("or_columns: column index out of range");
    acc = acc | a.column(i);
  }
  return acc;
}

BitVec delete_indices(const BitVec& v, std::span<const std::size_t> sorted_deletions) {
  for (std::size_t i = 0; i < sorted_deletions.size(); ++i) {
    if (sorted_deletions[i] >= v.size())
      throw ContractViolation("delete_indices: index out of range");
    if (i > 0 && sorted_deletions[i] <= sorted_deletions[i - 1])
      throw ContractViolation("delete_indices: indices must be strictly increasing");
  }
  BitVec out(v.size() - sorted_deletions.size());
  std::size_t next = 0, outpos = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (next < sorted_deletions.size() && sorted_deletions[next] == i) {
      ++next;
      continue;
    }
    if (v.get(i)) out.set(outpos, true);
    ++outpos;
  }
  return out;
}

std::size_t weight(const BitVec& v) { return v.weight(); }

std::vector<Run> runs(const BitVec& v) {
  std::vector<Run> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int sym = v.get(i) ? 1 : 0;
    if (!out.empty() && out.back().symbol == sym)
      ++out.back().length;
    else
      out.push_back(Run{sym, 1});
  }
  return out;
}

void write_matrix(std::ostream& out, const BitMatrix& a) {
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t r = 0; r < a.rows(); ++r) out << a.row(r).to_string() << '\n';
}

BitMatrix read_matrix(std::istream& in) {
  std::size_t m = 0, n = 0;
  if (!(in >> m >> n)) throw ParseError("matrix: missing dimension line");
  std::string line;
  std::getline(in, line);  // rest of the dimension line
  std::vector<BitVec> rows;
  rows.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (!std::getline(in, line)) throw ParseError("matrix: truncated row data");
    if (line.size() != n) throw ParseError("matrix: row has wrong length");
    rows.push_back(BitVec::from_string(line));
  }
  return BitMatrix::from_rows(rows);
}

void write_matrix_file(const std::string& path, const BitMatrix& a) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path);
  write_matrix(out, a);
}

BitMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open: " + path);
  return read_matrix(in);
}

void write_vector(std::ostream& out, const BitVec& v) { out << v.to_string() << '\n'; }

BitVec read_vector(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("vector: empty input");
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  return BitVec::from_string(line);
}

void write_vector_file(const std::string& path, const BitVec& v) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path);
  write_vector(out, v);
}

BitVec read_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open: " + path);
  return read_vector(in);
}

}  // namespace delgt
