#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seqspace/block_partition.hpp"
#include "seqspace/coordinate_space.hpp"
#include "seqspace/errors.hpp"
#include "seqspace/vec.hpp"

namespace seqspace {

/// Declared support metadata of a computable sequence.
///
/// "Finitely many nonzero coordinates" is undecidable for a black-box
/// generator, so the support class is part of the type and the zerofree
/// operation acts on the declaration, never on a scan heuristic.
enum class SupportKind {
    Finite,     ///< generator(n) is exactly zero for all n > bound
    AllNonzero, ///< generator(n) is never the zero vector
    Structured, ///< nonzero exactly on a declared strictly increasing index set
    Unknown,    ///< no declaration; zerofree needs an explicit scan bound
};

struct Support {
    SupportKind kind = SupportKind::Unknown;
    Index bound = 0;
    /// Strictly increasing enumeration j |-> n_j of the nonzero positions
    /// (Structured only).
    std::function<Index(Index)> nonzero_index;

    static Support finite(Index n0) { return Support{SupportKind::Finite, n0, {}}; }
    static Support all_nonzero() { return Support{SupportKind::AllNonzero, 0, {}}; }
    static Support structured(std::function<Index(Index)> enumerate) {
        return Support{SupportKind::Structured, 0, std::move(enumerate)};
    }
    static Support unknown() { return Support{SupportKind::Unknown, 0, {}}; }
};

/// Generator-defined infinite sequence of coordinate vectors.
///
/// Immutable after construction and purely functional: repeated evaluation
/// at the same index yields the identical value, so sequences can be shared
/// and evaluated from any thread. Nothing is ever materialized; only
/// truncate() forces evaluation.
class ComputableSequence {
public:
    using Generator = std::function<Vec(Index)>;
    using Overrides = std::map<Index, Vec>;

    ComputableSequence(CoordinateSpace space, Generator generator, Support support,
                       Overrides overrides = {})
        : space_(space),
          generator_(std::move(generator)),
          support_(std::move(support)),
          overrides_(std::move(overrides)) {
        space_.validate();
    }

    /// Override value if present, else generator(n).
    Vec eval(Index n) const {
        if (n < 1) throw std::invalid_argument("ComputableSequence::eval: n must be >= 1");
        if (!overrides_.empty()) {
            auto it = overrides_.find(n);
            if (it != overrides_.end()) return it->second;
        }
        return generator_(n);
    }

    double coordinate_norm(Index n) const { return vector_norm(space_, eval(n)); }

    const CoordinateSpace& space() const { return space_; }
    const Support& support() const { return support_; }
    const Overrides& overrides() const { return overrides_; }

    ComputableSequence with_override(Index n, Vec value) const {
        Overrides o = overrides_;
        o[n] = value;
        return ComputableSequence(space_, generator_, support_, std::move(o));
    }

private:
    CoordinateSpace space_;
    Generator generator_;
    Support support_;
    Overrides overrides_;
};

/// Scalar-field sequence (dim 1) from a plain double formula.
inline ComputableSequence scalar_sequence(std::function<double(Index)> f, Support support) {
    auto gen = [f = std::move(f)](Index n) { return Vec::scalar(f(n)); };
    return ComputableSequence(scalar_space(), std::move(gen), std::move(support));
}

inline ComputableSequence zero_sequence(CoordinateSpace space) {
    const std::size_t d = space.dim;
    return ComputableSequence(
        space, [d](Index) { return Vec::zero(d); }, Support::finite(0));
}

/// First N coordinates, evaluated once each.
inline std::vector<Vec> truncate(const ComputableSequence& x, Index n_depth) {
    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(n_depth));
    for (Index n = 1; n <= n_depth; ++n) out.push_back(x.eval(n));
    return out;
}

/// The zerofree version x^0: if x has only finitely many nonzero
/// coordinates the result is the zero sequence; otherwise the sequence of
/// nonzero coordinates of x in order, declared all-nonzero.
///
/// For Unknown support a scan bound B must be supplied, with the caller
/// guarantee that coordinates are all nonzero beyond B after deletion of the
/// zeros below B.
inline ComputableSequence zerofree(const ComputableSequence& x,
                                   std::optional<Index> scan_bound = std::nullopt) {
    switch (x.support().kind) {
        case SupportKind::Finite:
            return zero_sequence(x.space());
        case SupportKind::AllNonzero:
            return x;
        case SupportKind::Structured: {
            auto enumerate = x.support().nonzero_index;
            auto gen = [x, enumerate](Index j) { return x.eval(enumerate(j)); };
            return ComputableSequence(x.space(), std::move(gen), Support::all_nonzero());
        }
        case SupportKind::Unknown: {
            if (!scan_bound)
                throw UndecidableSupportError(
                    "zerofree: support is unknown and no scan bound was supplied");
            const Index bound = *scan_bound;
            auto head = std::make_shared<std::vector<Index>>();
            for (Index n = 1; n <= bound; ++n)
                if (!x.eval(n).is_zero()) head->push_back(n);
            auto gen = [x, head, bound](Index j) {
                if (j <= head->size()) return x.eval((*head)[static_cast<std::size_t>(j - 1)]);
                return x.eval(bound + (j - head->size()));
            };
            return ComputableSequence(x.space(), std::move(gen), Support::all_nonzero());
        }
    }
    throw std::logic_error("zerofree: unreachable");
}

/// y_i: the zerofree witness x^0 copied into block i of the partition.
/// Coordinate x_j sits at index block_index(i, j); all other coordinates are
/// exactly zero. The zerofree version of the result is x0 again.
inline ComputableSequence interleave(const ComputableSequence& x0, Index block) {
    if (block < 1) throw std::invalid_argument("interleave: block must be >= 1");
    if (x0.support().kind != SupportKind::AllNonzero)
        throw std::invalid_argument("interleave: witness must be all-nonzero (zerofree first)");
    const std::size_t d = x0.space().dim;
    auto gen = [x0, block, d](Index n) {
        const BlockCoord c = block_of(n);
        if (c.i != block) return Vec::zero(d);
        return x0.eval(c.j);
    };
    auto enumerate = [block](Index j) { return block_index(block, j); };
    return ComputableSequence(x0.space(), std::move(gen), Support::structured(enumerate));
}

/// Finite combination z = sum_{i<=m} a_i y_i of interleaved witness copies.
///
/// Because the blocks are pairwise disjoint, coordinate block_index(i, j)
/// is the single product a_i * x_j (componentwise) with no summation, and
/// every coordinate outside blocks 1..m is the exact zero vector.
class Combination {
public:
    Combination(std::vector<double> coefficients, ComputableSequence witness_zerofree)
        : coefficients_(std::move(coefficients)), witness_(std::move(witness_zerofree)) {
        if (witness_.support().kind != SupportKind::AllNonzero)
            throw std::invalid_argument("Combination: witness must be all-nonzero");
    }

    Vec eval(Index n) const {
        const BlockCoord c = block_of(n);
        if (c.i > coefficients_.size()) return Vec::zero(witness_.space().dim);
        return witness_.eval(c.j).scaled(coefficients_[static_cast<std::size_t>(c.i - 1)]);
    }

    /// Value at block_index(i, j) without the index round-trip.
    Vec block_eval(Index i, Index j) const {
        if (i < 1 || i > coefficients_.size()) return Vec::zero(witness_.space().dim);
        return witness_.eval(j).scaled(coefficients_[static_cast<std::size_t>(i - 1)]);
    }

    ComputableSequence sequence() const {
        auto self = *this;
        return ComputableSequence(
            witness_.space(), [self](Index n) { return self.eval(n); }, Support::unknown());
    }

    const std::vector<double>& coefficients() const { return coefficients_; }
    const ComputableSequence& witness_zerofree() const { return witness_; }

private:
    std::vector<double> coefficients_;
    ComputableSequence witness_;
};

inline Combination combine(std::vector<double> coefficients, ComputableSequence x0) {
    return Combination(std::move(coefficients), std::move(x0));
}

} // namespace seqspace
