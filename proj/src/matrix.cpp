#include "semider/matrix.hpp"

namespace semider {

namespace {

void require_same(const Matrix& a, const Matrix& b) {
  if (a.n() != b.n())
    throw DimensionError("matrix dimensions differ: " + std::to_string(a.n()) + " vs " +
                         std::to_string(b.n()));
  if (a.semiring()->name() != b.semiring()->name())
    throw CarrierMismatchError("matrix carriers differ: " + a.semiring()->name() + " vs " +
                               b.semiring()->name());
}

void require_dim(int n) {
  if (n < 1) throw DimensionError("matrix dimension must be positive");
}

}  // namespace

Matrix::Matrix(SemiringPtr sr, int n) : sr_(std::move(sr)), n_(n) {
  require_dim(n);
  entries_.assign(static_cast<std::size_t>(n) * n, sr_->zero());
}

std::size_t Matrix::idx(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw DimensionError("index (" + std::to_string(i) + "," + std::to_string(j) +
                         ") out of range for n=" + std::to_string(n_));
  return static_cast<std::size_t>(i) * n_ + j;
}

Matrix Matrix::identity(SemiringPtr sr, int n) {
  Matrix m(sr, n);
  for (int i = 0; i < n; ++i) m.set(i, i, sr->one());
  return m;
}

Matrix Matrix::unit(SemiringPtr sr, int n, int i, int j) {
  Matrix m(sr, n);
  m.set(i, j, sr->one());
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same(*this, o);
  Matrix r(sr_, n_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = sr_->add(entries_[k], o.entries_[k]);
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same(*this, o);
  Matrix r(sr_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Value acc = sr_->zero();
      for (int k = 0; k < n_; ++k) acc = sr_->add(acc, sr_->mul(at(i, k), o.at(k, j)));
      r.set(i, j, std::move(acc));
    }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return n_ == o.n_ && sr_->name() == o.sr_->name() && entries_ == o.entries_;
}

bool Matrix::operator<(const Matrix& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (sr_->name() != o.sr_->name()) return sr_->name() < o.sr_->name();
  return entries_ < o.entries_;
}

bool Matrix::is_zero() const {
  const Value z = sr_->zero();
  for (const auto& e : entries_)
    if (e != z) return false;
  return true;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (int i = 0; i < n_; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < n_; ++j) {
      if (j) out += ",";
      out += at(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

nlohmann::json Matrix::entries_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < n_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n_; ++j) row.push_back(sr_->value_to_json(at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json Matrix::to_json() const {
  return {{"semiring", sr_->name()}, {"n", n_}, {"entries", entries_json()}};
}

Matrix Matrix::from_json(const nlohmann::json& j, SemiringPtr force_carrier) {
  if (!j.is_object()) throw ParseError("matrix literal must be a JSON object");
  SemiringPtr sr = std::move(force_carrier);
  if (!sr) {
    if (!j.contains("semiring") || !j["semiring"].is_string())
      throw ParseError("matrix literal needs a \"semiring\" string");
    sr = parse_semiring(j["semiring"].get<std::string>());
  }
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("matrix literal needs an integer \"n\"");
  int n = j["n"].get<int>();
  require_dim(n);
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != static_cast<std::size_t>(n))
    throw ParseError("matrix literal needs an \"entries\" array of " + std::to_string(n) + " rows");
  Matrix m(sr, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = j["entries"][static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (int jj = 0; jj < n; ++jj)
      m.set(i, jj, sr->value_from_json(row[static_cast<std::size_t>(jj)]));
  }
  return m;
}

Matrix scalar_mul(const Value& a, const Matrix& A) {
  const auto& sr = A.semiring();
  if (!sr->contains(a))
    throw CarrierMismatchError("scalar " + a.str() + " is not in carrier '" + sr->name() + "'");
  Matrix r(sr, A.n());
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.n(); ++j) r.set(i, j, sr->mul(a, A.at(i, j)));
  return r;
}

Matrix shift_nilpotent(const SemiringPtr& sr, int n) {
  require_dim(n);
  Matrix m(sr, n);
  for (int i = 0; i + 1 < n; ++i) m.set(i, i + 1, sr->one());
  return m;
}

Matrix shift_cyclic(const SemiringPtr& sr, int n) {
  require_dim(n);
  Matrix m = shift_nilpotent(sr, n);
  m.set(n - 1, 0, sr->one());
  return m;
}

Matrix mat_power(const Matrix& A, std::uint64_t k) {
  Matrix acc = Matrix::identity(A.semiring(), A.n());
  Matrix base = A;
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

PatternMatrix::PatternMatrix(int n) : n_(n) {
  require_dim(n);
  bits_.assign(static_cast<std::size_t>(n) * n, 0);
}

std::size_t PatternMatrix::idx(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) throw DimensionError("pattern index out of range");
  return static_cast<std::size_t>(i) * n_ + j;
}

PatternMatrix PatternMatrix::identity(int n) {
  PatternMatrix p(n);
  for (int i = 0; i < n; ++i) p.set(i, i, true);
  return p;
}

PatternMatrix PatternMatrix::unit(int n, int i, int j) {
  PatternMatrix p(n);
  p.set(i, j, true);
  return p;
}

PatternMatrix PatternMatrix::operator+(const PatternMatrix& o) const {
  if (n_ != o.n_) throw DimensionError("pattern dimensions differ");
  PatternMatrix r(n_);
  for (std::size_t k = 0; k < bits_.size(); ++k) r.bits_[k] = bits_[k] | o.bits_[k];
  return r;
}

PatternMatrix PatternMatrix::operator*(const PatternMatrix& o) const {
  if (n_ != o.n_) throw DimensionError("pattern dimensions differ");
  PatternMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      bool acc = false;
      for (int k = 0; k < n_ && !acc; ++k) acc = bit(i, k) && o.bit(k, j);
      r.set(i, j, acc);
    }
  return r;
}

bool PatternMatrix::operator<(const PatternMatrix& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return bits_ < o.bits_;
}

bool PatternMatrix::is_zero() const {
  for (auto b : bits_)
    if (b) return false;
  return true;
}

Matrix PatternMatrix::embed(const SemiringPtr& sr) const {
  Matrix m(sr, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (bit(i, j)) m.set(i, j, sr->one());
  return m;
}

std::string PatternMatrix::str() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i) out += "|";
    for (int j = 0; j < n_; ++j) out += bit(i, j) ? '1' : '0';
  }
  return out;
}

nlohmann::json PatternMatrix::bits_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < n_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n_; ++j) row.push_back(bit(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

PatternMatrix pattern(const Matrix& A) {
  PatternMatrix p(A.n());
  const Value z = A.semiring()->zero();
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.n(); ++j) p.set(i, j, A.at(i, j) != z);
  return p;
}

bool is_subpattern(const PatternMatrix& p, const PatternMatrix& q) {
  if (p.n() != q.n()) throw DimensionError("pattern dimensions differ");
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (p.bit(i, j) && !q.bit(i, j)) return false;
  return true;
}

}  // namespace semider
