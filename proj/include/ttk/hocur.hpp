#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ttk/basis.hpp"
#include "ttk/dense_tensor.hpp"
#include "ttk/maxvol.hpp"
#include "ttk/tensor_train.hpp"

namespace ttk {

/// Ordered list of multi-indices over a prefix of modes (row sets) or a
/// suffix of modes ending in the snapshot mode (column sets).
struct IndexSet {
    std::vector<MultiIndex> entries;

    [[nodiscard]] std::size_t size() const { return entries.size(); }
    const MultiIndex& operator[](std::size_t k) const { return entries[k]; }

    /// The set {()} holding one empty multi-index.
    static IndexSet unit() { return IndexSet{{MultiIndex{}}}; }
    /// Entries at the given 1-based positions.
    [[nodiscard]] IndexSet subset(const std::vector<std::size_t>& positions) const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

/// How the initial column sets pick their first candidates: the leading
/// ones (prefix) or ones evenly spaced over the candidate list (spread).
enum class InitialColumns { prefix, spread };

struct HocurConfig {
    /// Caps r_1..r_p on the bonds of the order-(p+1) result.
    std::vector<Index> max_ranks;
    int n_iter = 2;
    double alpha = 2.0;
    double maxvol_tol = kDefaultMaxvolTol;
    int maxvol_max_iter = kDefaultMaxvolMaxIter;
    /// Relative pivot threshold for independent_columns.
    double column_tol = 1e-10;
    InitialColumns initial_columns = InitialColumns::prefix;

    /// Checks the rank chain against mode sizes (n_1, ..., n_p, m).
    void validate(const ModeSizes& dims) const;
};

struct HocurReport {
    /// I_0..I_p
    std::vector<IndexSet> row_sets;
    /// J_2..J_{p+2}; entry k holds J_{k+2}.
    std::vector<IndexSet> column_sets;
    /// Largest |M M_I^{-1}| of each forward step in the last forward sweep.
    std::vector<double> forward_certificates;
    int sweeps = 0;
    bool stopped_early = false;
    int unconverged_maxvol = 0;
    int regularized_solves = 0;
    int rank_reductions = 0;
    std::vector<std::string> warnings;

    [[nodiscard]] const IndexSet& rows(std::size_t q) const { return row_sets.at(q); }
    /// J_q for q = 2..p+2.
    [[nodiscard]] const IndexSet& columns(std::size_t q) const { return column_sets.at(q - 2); }
};

struct HocurResult {
    TensorTrain tt;
    HocurReport report;
};

/// Submatrix of the transformed data tensor with rows (I entry, i_{q+1})
/// (I entry fastest) and columns given by J, whose last component is the
/// snapshot index. For q = p the row mode is the snapshot mode and J = {()}.
Matrix eval_subtensor(const Matrix& data, const BasisSpec& spec, const IndexSet& rows, const IndexSet& cols,
                      std::size_t q);

/// Maps flat 1-based row picks of an (|I_q| n) x k matrix to I_{q+1}.
IndexSet extend_row_set(const IndexSet& rows, const std::vector<std::size_t>& picks, std::size_t n);

/// Maps flat 1-based column picks of an r x (n |J|) reshape (mode index
/// fastest) to the column set one mode further left.
IndexSet extend_column_set(const IndexSet& cols, const std::vector<std::size_t>& picks, std::size_t n);

/// Higher-order CUR approximation of the transformed data tensor of
/// `data` (d x m) under `spec`. Result has order p + 1.
HocurResult hocur(const Matrix& data, const BasisSpec& spec, const HocurConfig& config);
TensorTrain hocur_transform(const Matrix& data, const BasisSpec& spec, const HocurConfig& config);

} // namespace ttk
