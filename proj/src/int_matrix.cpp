#include "khova/int_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace khova {

void IntMatrix::add(std::size_t r, std::size_t c, const BigInt& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::add index out of range");
  if (v == 0) return;
  auto& row = data_[r];
  auto [it, inserted] = row.try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  }
}

BigInt IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at index out of range");
  auto it = data_[r].find(c);
  return it == data_[r].end() ? BigInt(0) : it->second;
}

std::size_t IntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace(r, v);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (const auto& [k, av] : a.data_[r])
      for (const auto& [c, bv] : b.data_[k]) out.add(r, c, av * bv);
  return out;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error("argument", "field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q" || text == "0") return rationals();
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("bad field '" + std::string(text) + "': expected q or a prime");
  return prime(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

namespace {

template <class T>
using SparseVec = std::vector<std::pair<std::size_t, T>>;

template <class T>
std::vector<SparseVec<T>> sparse_rows(const IntMatrix& m, auto&& convert) {
  std::vector<SparseVec<T>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVec<T> v;
    for (const auto& [c, x] : m.row(r)) {
      T y = convert(x);
      if (y != 0) v.emplace_back(c, std::move(y));
    }
    if (!v.empty()) rows.push_back(std::move(v));
  }
  // Sparse rows first keeps fill-in down.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return rows;
}

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

void divide_content(SparseVec<BigInt>& v) {
  BigInt g = 0;
  for (const auto& [c, x] : v) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  if (g < 0) g = -g;
  if (v.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, x] : v) x /= g;
}

// (lead(p)/g) * r - (lead(r)/g) * p with g = gcd of the two leading entries.
// Both vectors share their leading column, which cancels.
SparseVec<BigInt> eliminate(const SparseVec<BigInt>& r, const SparseVec<BigInt>& p) {
  const BigInt g = boost::multiprecision::gcd(r.front().second, p.front().second);
  const BigInt fr = p.front().second / g;
  const BigInt fp = r.front().second / g;
  SparseVec<BigInt> out;
  out.reserve(r.size() + p.size());
  std::size_t i = 1, j = 1;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, fr * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -fp * p[j].second);
      ++j;
    } else {
      BigInt x = fr * r[i].second - fp * p[j].second;
      if (x != 0) out.emplace_back(r[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t rank_rational(const IntMatrix& m) {
  auto rows = sparse_rows<BigInt>(m, [](const BigInt& x) { return x; });
  std::vector<SparseVec<BigInt>> pivots(m.cols());
  std::size_t rank = 0;
  for (auto& row : rows) {
    SparseVec<BigInt> r = std::move(row);
    while (!r.empty()) {
      divide_content(r);
      auto& pivot = pivots[r.front().first];
      if (pivot.empty()) {
        pivot = std::move(r);
        ++rank;
        break;
      }
      if (abs_value(r.front().second) < abs_value(pivot.front().second)) std::swap(r, pivot);
      r = eliminate(r, pivot);
    }
  }
  return rank;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t out = 1;
  b %= p;
  while (e != 0) {
    if (e & 1) out = out * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return out;
}

std::size_t rank_modular(const IntMatrix& m, std::uint64_t p) {
  auto to_mod = [p](const BigInt& x) {
    BigInt y = x % p;
    if (y < 0) y += p;
    return y.convert_to<std::uint64_t>();
  };
  auto rows = sparse_rows<std::uint64_t>(m, to_mod);
  std::vector<SparseVec<std::uint64_t>> pivots(m.cols());
  std::size_t rank = 0;
  for (auto& row : rows) {
    SparseVec<std::uint64_t> r = std::move(row);
    while (!r.empty()) {
      auto& pivot = pivots[r.front().first];
      if (pivot.empty()) {
        const std::uint64_t inv = pow_mod(r.front().second, p - 2, p);
        for (auto& [c, x] : r) x = x * inv % p;
        pivot = std::move(r);
        ++rank;
        break;
      }
      // pivot is monic; r <- r - lead(r) * pivot
      const std::uint64_t f = r.front().second;
      SparseVec<std::uint64_t> out;
      out.reserve(r.size() + pivot.size());
      std::size_t i = 1, j = 1;
      while (i < r.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < r.size() && r[i].first < pivot[j].first)) {
          out.push_back(r[i++]);
        } else if (i == r.size() || pivot[j].first < r[i].first) {
          out.emplace_back(pivot[j].first, (p - f * pivot[j].second % p) % p);
          ++j;
        } else {
          const std::uint64_t x = (r[i].second + p - f * pivot[j].second % p) % p;
          if (x != 0) out.emplace_back(r[i].first, x);
          ++i;
          ++j;
        }
      }
      r = std::move(out);
    }
  }
  return rank;
}

}  // namespace

std::size_t rank(const IntMatrix& m, Field field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (field.is_rational()) return rank_rational(m);
  return rank_modular(m, field.characteristic());
}

std::size_t bareiss_rank(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& [c, v] : m.row(r)) a[r][c] = v;

  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      if (best == rows || abs_value(a[r][c]) < abs_value(a[best][c])) best = r;
    }
    if (best == rows) continue;
    std::swap(a[rank], a[best]);
    const BigInt& piv = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) a[r][j] = (piv * a[r][j] - a[r][c] * a[rank][j]) / prev;
      a[r][c] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace khova
