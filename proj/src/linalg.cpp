#include "graphprod/linalg.hpp"

#include <map>
#include <unordered_map>

#include "graphprod/errors.hpp"

namespace graphprod {

int DenseMatrix::rank() const {
    DenseMatrix w = *this;
    int rank = 0;
    for (int j = 0; j < cols_ && rank < rows_; ++j) {
        int pivot = -1;
        for (int i = rank; i < rows_; ++i)
            if (!w.at(i, j).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        for (int k = 0; k < cols_; ++k)
            std::swap(w.at(pivot, k), w.at(rank, k));
        FieldElem inv = w.at(rank, j).inverse();
        for (int k = j; k < cols_; ++k)
            w.at(rank, k) = w.at(rank, k) * inv;
        for (int i = rank + 1; i < rows_; ++i) {
            FieldElem c = w.at(i, j);
            if (c.is_zero())
                continue;
            for (int k = j; k < cols_; ++k)
                w.at(i, k) = w.at(i, k) - c * w.at(rank, k);
        }
        ++rank;
    }
    return rank;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw ValidationError("matrix product shape mismatch");
    DenseMatrix out(field_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElem& v = at(i, k);
            if (v.is_zero())
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += v * rhs.at(k, j);
        }
    return out;
}

bool DenseMatrix::is_zero() const {
    for (const FieldElem& v : a_)
        if (!v.is_zero())
            return false;
    return true;
}

void SparseMatrix::push_entry(int col, int row, FieldElem value) {
    if (col < 0 || static_cast<size_t>(col) >= cols_ || row < 0 || row >= rows_)
        throw ValidationError("sparse entry out of range");
    Column& c = col_[static_cast<size_t>(col)];
    if (!c.empty() && c.back().first >= row)
        throw ValidationError("sparse entries must be pushed in increasing row order");
    if (!value.is_zero())
        c.emplace_back(row, std::move(value));
}

namespace {

// w -= coeff * v, both sorted by row.
SparseMatrix::Column axpy_sub(const SparseMatrix::Column& w, const FieldElem& coeff,
                              const SparseMatrix::Column& v) {
    SparseMatrix::Column out;
    out.reserve(w.size() + v.size());
    size_t i = 0, j = 0;
    while (i < w.size() || j < v.size()) {
        if (j >= v.size() || (i < w.size() && w[i].first < v[j].first)) {
            out.push_back(w[i++]);
        } else if (i >= w.size() || v[j].first < w[i].first) {
            out.emplace_back(v[j].first, -(coeff * v[j].second));
            ++j;
        } else {
            FieldElem val = w[i].second - coeff * v[j].second;
            if (!val.is_zero())
                out.emplace_back(w[i].first, std::move(val));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

int SparseMatrix::rank() const {
    // Left-looking column reduction: pivots maps a row index to a finished
    // column normalized to leading coefficient one.
    std::unordered_map<int, Column> pivots;
    pivots.reserve(cols_);
    int rank = 0;
    for (size_t j = 0; j < cols_; ++j) {
        Column work = col_[j];
        while (!work.empty()) {
            auto it = pivots.find(work.front().first);
            if (it == pivots.end())
                break;
            work = axpy_sub(work, work.front().second, it->second);
        }
        if (work.empty())
            continue;
        FieldElem inv = work.front().second.inverse();
        for (auto& [row, val] : work)
            val = val * inv;
        int lead = work.front().first;
        pivots.emplace(lead, std::move(work));
        ++rank;
    }
    return rank;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
    if (static_cast<int>(cols_) != rhs.rows_)
        throw ValidationError("matrix product shape mismatch");
    SparseMatrix out(field_, rows_, rhs.cols());
    for (int j = 0; j < rhs.cols(); ++j) {
        std::map<int, FieldElem> acc;
        for (const auto& [mid, v] : rhs.column(j))
            for (const auto& [row, w] : col_[static_cast<size_t>(mid)]) {
                auto [it, inserted] = acc.emplace(row, v * w);
                if (!inserted)
                    it->second += v * w;
            }
        for (const auto& [row, val] : acc)
            if (!val.is_zero())
                out.push_entry(j, row, val);
    }
    return out;
}

bool SparseMatrix::is_zero() const {
    for (const Column& c : col_)
        if (!c.empty())
            return false;
    return true;
}

} // namespace graphprod
