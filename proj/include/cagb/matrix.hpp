#ifndef CAGB_MATRIX_HPP
#define CAGB_MATRIX_HPP

#include <memory>
#include <string>
#include <vector>

#include "cagb/field.hpp"

namespace cagb {

// Immutable matrix over one field; the common currency every backend
// freezes to, so results are comparable across backends.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols, Field field);
  static Matrix fromRows(Field field,
                         std::vector<std::vector<FieldElem>> rows);

  std::size_t rowCount() const { return rows_; }
  std::size_t colCount() const { return cols_; }
  const Field& field() const { return field_; }
  const FieldElem& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  bool rowIsZero(std::size_t r) const;
  std::size_t nonzeroRowCount() const;

  bool operator==(const Matrix& rhs) const;

private:
  friend class DenseMutableMatrix;
  friend class SparseMutableMatrix;
  std::size_t rows_, cols_;
  Field field_;
  std::vector<FieldElem> data_; // row-major
};

// Mutable view: in-place row operations, then freeze.
class MutableMatrix {
public:
  virtual ~MutableMatrix() = default;
  virtual std::size_t rowCount() const = 0;
  virtual std::size_t colCount() const = 0;
  virtual FieldElem get(std::size_t r, std::size_t c) const = 0;
  virtual void scaleRow(std::size_t r, const FieldElem& c) = 0;
  // row dst += c * row src
  virtual void addScaledRow(std::size_t dst, std::size_t src,
                            const FieldElem& c) = 0;
  virtual void swapRows(std::size_t a, std::size_t b) = 0;
  virtual Matrix freeze() const = 0;
};

// A choice of mutable representation plus the elimination built on it.
class MatrixBackend {
public:
  virtual ~MatrixBackend() = default;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<MutableMatrix> thaw(const Matrix& m) const = 0;
  // Reduced row echelon form; exact arithmetic, row space preserved.
  Matrix gaussReduction(const Matrix& m) const;
};

const MatrixBackend& denseBackend();
const MatrixBackend& sparseBackend();
const MatrixBackend& backendByName(const std::string& name); // dense|sparse

} // namespace cagb

#endif
