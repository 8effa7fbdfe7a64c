#ifndef INTERSECTQ_CATALOG_HPP
#define INTERSECTQ_CATALOG_HPP

#include "intersectq/lattice.hpp"

#include <string>
#include <vector>

namespace intersectq {

/// A lattice written as the intersection of a few simpler lattices.
struct Decomposition {
    std::string name;
    std::string description;
    int field_d = 1;
    std::vector<Lattice> components;
    FieldMat expected;
    std::string expected_name;
    /// The intersection equals `expected` only up to a similarity.
    bool up_to_similarity = false;
    /// The first two components already meet in `expected`.
    bool pair_suffices = false;
    /// Complex or quaternionic generator rows before real expansion, one string per component.
    std::vector<std::string> symbolic;
    /// Small enough for honeycomb enumeration.
    bool honeycomb = false;
};

const std::vector<std::string>& catalog_names();
/// Throws std::invalid_argument for an unknown name.
Decomposition catalog_get(const std::string& name);

struct NamedPartition {
    std::string name;
    Lattice lattice;
    FramePartition partition;
    FrameKind kind;
};
/// D4 into 3 coordinate frames, E8 into 15 coordinate frames, E8 into 10 A2-frames, E6 into 4 A2-frames.
std::vector<NamedPartition> catalog_frame_partitions();

struct MinimalVectorCount {
    std::string lattice;
    long long vectors = 0;
    long long frame_size = 0;
    long long copies = 0;  // number of component lattices in the decomposition
};
const std::vector<MinimalVectorCount>& minimal_vector_counts();

struct ThetaRow {
    Rational norm;
    std::size_t count = 0;
};
/// Small-norm vector counts for bcc = <(1,0,0), (0,1,0), (1/2,1/2,1/2)>.
const std::vector<ThetaRow>& bcc_theta_prefix();
/// Small-norm vector counts for fcc = <(1,1,0), (1,-1,0), (0,1,-1)>.
const std::vector<ThetaRow>& fcc_theta_prefix();

struct CountingIdentity {
    std::string lattice;
    unsigned exponent = 0;
    std::vector<CountingTerm> terms;
};
/// Leech, E8 and K12 identities with the divisors as printed.
const std::vector<CountingIdentity>& counting_identities();

/// Generators of the S3 permuting the D4 components: the scaled Hadamard matrix and diag(-1,1,1,1).
std::vector<FieldMat> d4_symmetries();

/// Two length-4 codes for the Construction A intersection demo.
std::pair<BinaryCode, BinaryCode> construction_a_demo_codes();

enum class CheckStatus { pass, fail, warn };
const char* to_string(CheckStatus s);

struct CheckItem {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::string detail;
};

/// Runs every stored identity; the list covers each decomposition, partition and identity.
std::vector<CheckItem> verify_all();

}  // namespace intersectq

#endif
