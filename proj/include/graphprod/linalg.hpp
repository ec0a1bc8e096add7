// Exact linear algebra over a Field: a dense matrix for small simplicial
// boundary maps and a sparse column matrix for the much larger bar-complex
// differentials. Both ranks use plain Gaussian elimination with the first
// usable pivot, so results are deterministic given the basis order.

#ifndef GRAPHPROD_LINALG_HPP
#define GRAPHPROD_LINALG_HPP

#include <utility>
#include <vector>

#include "graphprod/field.hpp"

namespace graphprod {

class DenseMatrix {
  public:
    DenseMatrix(const Field& f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), f.zero()) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    FieldElem& at(int i, int j) {
        return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
    }
    const FieldElem& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
    }

    int rank() const;
    DenseMatrix multiply(const DenseMatrix& rhs) const;
    bool is_zero() const;

  private:
    Field field_;
    int rows_, cols_;
    std::vector<FieldElem> a_;
};

// Columns are sorted by row index and hold no explicit zeros.
class SparseMatrix {
  public:
    using Column = std::vector<std::pair<int, FieldElem>>;

    SparseMatrix(const Field& f, int rows, int cols)
        : field_(f), rows_(rows), cols_(static_cast<size_t>(cols)), col_(static_cast<size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(cols_); }
    const Field& field() const { return field_; }

    // Entries must arrive with strictly increasing row indices per column.
    void push_entry(int col, int row, FieldElem value);
    const Column& column(int j) const { return col_[static_cast<size_t>(j)]; }

    int rank() const;
    SparseMatrix multiply(const SparseMatrix& rhs) const;
    bool is_zero() const;

  private:
    Field field_;
    int rows_;
    size_t cols_;
    std::vector<Column> col_;
};

} // namespace graphprod

#endif
