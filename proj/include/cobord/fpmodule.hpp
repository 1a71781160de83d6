#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobord/bp_ring.hpp"
#include "cobord/fgl.hpp"
#include "cobord/linalg.hpp"

namespace cobord {

/// One basis element of a free BP^*-module in a fixed degree: monomial * generator.
struct FreeBasisElem {
    std::size_t generator;
    VMonomial monomial;
};

/// BP^*-linear map between free modules. entries[t][s] is the coefficient of target
/// generator t in the image of source generator s, homogeneous of degree
/// source_degrees[s] - target_degrees[t].
class FreeMap {
public:
    FreeMap(std::vector<int> source_degrees, std::vector<int> target_degrees);

    const std::vector<int>& source_degrees() const { return src_; }
    const std::vector<int>& target_degrees() const { return tgt_; }
    const BPElem& entry(std::size_t t, std::size_t s) const { return entries_[t][s]; }
    /// Throws std::invalid_argument when e has the wrong degree.
    void set_entry(std::size_t t, std::size_t s, BPElem e);

    /// Basis of the free module on `degrees` in degree d, generator-major.
    static std::vector<FreeBasisElem> degree_basis(const std::vector<int>& degrees, int d, int k);

    /// Matrix of the map in degree d over Z_(2), columns indexed by
    /// degree_basis(source, d), rows by degree_basis(target, d). Throws CapacityError
    /// if some multiplier would need v_{k+1}.
    Matrix degree_matrix(int d, int k) const;

private:
    std::vector<int> src_;
    std::vector<int> tgt_;
    std::vector<std::vector<BPElem>> entries_;
};

/// Row index of (generator, monomial) in a degree basis, or nullopt.
std::optional<std::size_t> find_basis_index(const std::vector<FreeBasisElem>& basis, std::size_t generator,
                                            const VMonomial& m);

/// Finitely presented graded BP^*-module.
class FPModule {
public:
    struct Relation {
        std::vector<BPElem> coeffs;  // one per generator
        int degree;
    };

    FPModule() = default;
    explicit FPModule(std::vector<int> generator_degrees, std::vector<std::string> names = {});

    std::size_t generator_count() const { return gens_.size(); }
    const std::vector<int>& generator_degrees() const { return gens_; }
    const std::vector<Relation>& relations() const { return rels_; }
    const std::string& generator_name(std::size_t g) const { return names_[g]; }

    /// Degree is inferred from the terms; throws std::invalid_argument if the relation
    /// is inhomogeneous or zero.
    void add_relation(std::vector<BPElem> coeffs);
    void add_relation(std::vector<BPElem> coeffs, int degree);

    /// Relations as a map from the free module on relations to the free module on
    /// generators.
    FreeMap presentation_map() const;

    std::string str() const;

private:
    std::vector<int> gens_;
    std::vector<std::string> names_;
    std::vector<Relation> rels_;
};

/// Presentation of BP^* of the 2n-skeleton of BZ/2: generators c1^0..c1^n in degrees
/// 0, 2, .., 2n and relations R_j = sum_i a_i c1^{j-1+i} (j = 1..n) with a_i the
/// [2]-series coefficients, exponents above n dropped.
FPModule skeleton_presentation(int n, int k = kDefaultGeneratorCount);
/// Same, reusing a precomputed series (truncation >= n).
FPModule skeleton_presentation(int n, const CSeries& series);

struct ExactnessReport {
    bool exact = true;
    std::optional<int> first_failing_degree;
    struct Row {
        int degree;
        std::size_t source_dim;
        std::size_t rank;
    };
    std::vector<Row> rows;
};

/// Degreewise injectivity of the relation map of skeleton_presentation(n) over
/// [lo, hi].
ExactnessReport resolution_exactness_check(int n, int lo, int hi, int k = kDefaultGeneratorCount);
ExactnessReport resolution_exactness_check(const FPModule& m, int lo, int hi, int k);

}  // namespace cobord
