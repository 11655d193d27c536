#include "cagb/matrix.hpp"

#include <algorithm>

namespace cagb {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field),
      data_(rows * cols, field.zero()) {}

Matrix Matrix::fromRows(Field field, std::vector<std::vector<FieldElem>> rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols)
      throw RaggedRows("matrix rows have unequal lengths");
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field)
        throw MixedFieldError("matrix entry from a different field");
      m.data_[r * cols + c] = std::move(rows[r][c]);
    }
  return m;
}

bool Matrix::rowIsZero(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if (!at(r, c).isZero())
      return false;
  return true;
}

std::size_t Matrix::nonzeroRowCount() const {
  std::size_t n = 0;
  for (std::size_t r = 0; r < rows_; ++r)
    if (!rowIsZero(r))
      ++n;
  return n;
}

bool Matrix::operator==(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
    return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != rhs.data_[i])
      return false;
  return true;
}

Matrix MatrixBackend::gaussReduction(const Matrix& m) const {
  std::unique_ptr<MutableMatrix> w = thaw(m);
  std::size_t rows = w->rowCount(), cols = w->colCount();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = lead; r < rows; ++r)
      if (!w->get(r, col).isZero()) {
        pivot = r;
        break;
      }
    if (pivot == rows)
      continue;
    if (pivot != lead)
      w->swapRows(pivot, lead);
    FieldElem lv = w->get(lead, col);
    if (!lv.isOne())
      w->scaleRow(lead, lv.recip());
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead)
        continue;
      FieldElem v = w->get(r, col);
      if (!v.isZero())
        w->addScaledRow(r, lead, -v);
    }
    ++lead;
  }
  return w->freeze();
}

namespace {

class DenseMutable final : public MutableMatrix {
public:
  explicit DenseMutable(const Matrix& m)
      : field_(m.field()), cols_(m.colCount()) {
    rows_.resize(m.rowCount());
    for (std::size_t r = 0; r < m.rowCount(); ++r) {
      rows_[r].reserve(cols_);
      for (std::size_t c = 0; c < cols_; ++c)
        rows_[r].push_back(m.at(r, c));
    }
  }

  std::size_t rowCount() const override { return rows_.size(); }
  std::size_t colCount() const override { return cols_; }

  FieldElem get(std::size_t r, std::size_t c) const override {
    return rows_[r][c];
  }

  void scaleRow(std::size_t r, const FieldElem& c) override {
    for (auto& x : rows_[r])
      x = x * c;
  }

  void addScaledRow(std::size_t dst, std::size_t src,
                    const FieldElem& c) override {
    for (std::size_t i = 0; i < cols_; ++i)
      rows_[dst][i] = rows_[dst][i] + c * rows_[src][i];
  }

  void swapRows(std::size_t a, std::size_t b) override {
    std::swap(rows_[a], rows_[b]);
  }

  Matrix freeze() const override {
    return Matrix::fromRows(field_, rows_);
  }

private:
  Field field_;
  std::size_t cols_;
  std::vector<std::vector<FieldElem>> rows_;
};

// Rows as sorted (column, value) lists with no explicit zeros.
class SparseMutable final : public MutableMatrix {
public:
  using Entry = std::pair<std::size_t, FieldElem>;

  explicit SparseMutable(const Matrix& m)
      : field_(m.field()), rows_(m.rowCount()), cols_(m.colCount()) {
    for (std::size_t r = 0; r < m.rowCount(); ++r)
      for (std::size_t c = 0; c < m.colCount(); ++c)
        if (!m.at(r, c).isZero())
          rows_[r].push_back({c, m.at(r, c)});
  }

  std::size_t rowCount() const override { return rows_.size(); }
  std::size_t colCount() const override { return cols_; }

  FieldElem get(std::size_t r, std::size_t c) const override {
    const auto& row = rows_[r];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c)
      return it->second;
    return field_.zero();
  }

  void scaleRow(std::size_t r, const FieldElem& c) override {
    if (c.isZero()) {
      rows_[r].clear();
      return;
    }
    for (auto& e : rows_[r])
      e.second = e.second * c;
  }

  void addScaledRow(std::size_t dst, std::size_t src,
                    const FieldElem& c) override {
    if (c.isZero())
      return;
    const auto& s = rows_[src];
    const auto& d = rows_[dst];
    std::vector<Entry> merged;
    merged.reserve(d.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < d.size() || j < s.size()) {
      if (j == s.size() || (i < d.size() && d[i].first < s[j].first)) {
        merged.push_back(d[i++]);
      } else if (i == d.size() || s[j].first < d[i].first) {
        FieldElem v = c * s[j].second;
        if (!v.isZero())
          merged.push_back({s[j].first, std::move(v)});
        ++j;
      } else {
        FieldElem v = d[i].second + c * s[j].second;
        if (!v.isZero())
          merged.push_back({d[i].first, std::move(v)});
        ++i;
        ++j;
      }
    }
    rows_[dst] = std::move(merged);
  }

  void swapRows(std::size_t a, std::size_t b) override {
    std::swap(rows_[a], rows_[b]);
  }

  Matrix freeze() const override {
    Matrix out(rows_.size(), cols_, field_);
    std::vector<std::vector<FieldElem>> dense(
        rows_.size(), std::vector<FieldElem>(cols_, field_.zero()));
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& e : rows_[r])
        dense[r][e.first] = e.second;
    return Matrix::fromRows(field_, std::move(dense));
  }

private:
  Field field_;
  std::vector<std::vector<Entry>> rows_;
  std::size_t cols_;
};

class DenseBackendImpl final : public MatrixBackend {
public:
  std::string name() const override { return "dense"; }
  std::unique_ptr<MutableMatrix> thaw(const Matrix& m) const override {
    return std::make_unique<DenseMutable>(m);
  }
};

class SparseBackendImpl final : public MatrixBackend {
public:
  std::string name() const override { return "sparse"; }
  std::unique_ptr<MutableMatrix> thaw(const Matrix& m) const override {
    return std::make_unique<SparseMutable>(m);
  }
};

} // namespace

const MatrixBackend& denseBackend() {
  static DenseBackendImpl instance;
  return instance;
}

const MatrixBackend& sparseBackend() {
  static SparseBackendImpl instance;
  return instance;
}

const MatrixBackend& backendByName(const std::string& name) {
  if (name == "dense")
    return denseBackend();
  if (name == "sparse")
    return sparseBackend();
  throw Error("unknown matrix backend '" + name + "'");
}

} // namespace cagb
