#pragma once

/*
 * Arbitrary finite rings (possibly non-commutative, possibly non-unital)
 * given by full addition and multiplication tables over element indices
 * 0..N-1.  This is the brute-force oracle representation: nothing about a
 * TableRing is trusted until the axioms have been verified.
 *
 * Validation is complete but not cubic: a small additive generating set S
 * is extracted first, then associativity of + and * and both distributive
 * laws are checked on generator-pinned triples (Light's test, and the
 * bilinear expansion of products over sums of generators).  Every reported
 * witness is a concrete failing triple of the violated axiom.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "midealkit/bitset.hpp"
#include "midealkit/structured.hpp"

namespace midealkit {

inline constexpr std::int64_t kDefaultTableCap = 4096;

struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TableAxiomError : std::runtime_error {
    enum class Kind {
        Shape,         // tables not square / entries out of range
        AddIdentity,   // declared zero is not an additive identity
        AddInverse,    // witness[0] has no additive inverse
        AddCommutative,
        AddAssociative,
        Distributive,
        MulAssociative,
        UnitClaim,     // declared unit is not a two-sided identity
    };
    TableAxiomError(Kind k, std::array<int, 3> w, const std::string& msg)
        : std::runtime_error(msg), kind(k), witness(w) {}
    Kind kind;
    std::array<int, 3> witness;
};

struct RawTables {
    int size = 0;
    int zero = 0;
    std::optional<int> unit;  // claim to verify; absent means "derive"
    std::vector<std::vector<int>> add;
    std::vector<std::vector<int>> mul;
    std::string name;
};

class TableRing {
public:
    int size() const { return n_; }
    int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * n_ + b]; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int zero() const { return zero_; }
    std::optional<int> unit() const { return unit_; }
    bool unital() const { return unit_.has_value(); }
    bool commutative() const { return commutative_; }
    // Exponent of the additive group.
    std::int64_t characteristic() const { return characteristic_; }
    const std::string& name() const { return name_; }
    void rename(std::string name) { name_ = std::move(name); }

    // t-fold sum of x (t may be any integer).
    int integer_multiple(std::int64_t t, int x) const;

    const std::vector<int>& additive_generators() const { return add_gens_; }

private:
    friend TableRing validate_table(const RawTables& raw);
    int n_ = 0;
    int zero_ = 0;
    std::optional<int> unit_;
    bool commutative_ = false;
    std::int64_t characteristic_ = 1;
    std::vector<int> add_, mul_, neg_;
    std::vector<int> add_gens_;
    std::string name_;
};

// Checks every ring axiom; returns the ring with derived flags or throws
// TableAxiomError with a concrete witness.
TableRing validate_table(const RawTables& raw);

// Structured ring -> explicit tables, elements in mixed-radix component
// order.  Throws SizeCapError when the cardinality exceeds cap.
TableRing to_table(const StructuredRing& r, std::int64_t cap = kDefaultTableCap);

// Element mask of a structured ideal inside to_table(r)'s index space.
Bitset mask_of_ideal(const StructuredRing& r, const StructuredIdeal& e);

// Full k x k matrix ring over a unital base.
TableRing make_matrix_ring(const TableRing& base, int k, std::int64_t cap = kDefaultTableCap);

// Direct product with mixed-radix element encoding; unital iff every
// factor is.
TableRing make_table_product(const std::vector<TableRing>& factors,
                             std::int64_t cap = kDefaultTableCap);

// Entry mask -> matrix mask and back (see classify.hpp for the lattice
// transport built on these).
Bitset matrix_mask_of(const TableRing& base, int k, const Bitset& entries);
Bitset entry_set_of_matrix_mask(const TableRing& base, int k, const Bitset& matrices);

struct Unitization {
    TableRing ring;          // carrier Z_c x R, unit (1,0)
    bool base_was_unital;    // allowed, but the split below is then proper
    int embed(int x) const { return x; }  // R sits at indices 0..N-1 as {0} x R
    Bitset base_copy;        // mask of {0} x R
};

// Adjoins an identity over Z_c, c the additive characteristic.  Rejects
// the one-element ring.
Unitization make_unitization(const TableRing& r, std::int64_t cap = kDefaultTableCap);

struct Subring {
    TableRing ring;
    std::vector<int> to_parent;  // subring index -> parent element
    int from_parent(int parent_elem) const;
};

// An ideal (any additively and multiplicatively closed subset containing
// zero) regarded as a ring in its own right.
Subring subring_of_ideal(const TableRing& r, const Bitset& ideal);

// Contains zero, additively closed with inverses, absorbs left and right
// multiplication by every ring element.
bool is_ideal_mask(const TableRing& r, const Bitset& mask);

struct TableQuotient {
    TableRing ring;
    std::vector<int> projection;  // q_K: parent element -> class index
    std::vector<int> representative;  // class index -> least parent element
    Bitset push_forward(const TableRing& parent, const Bitset& ideal) const;
};

// Coset ring R/K for an ideal K.
TableQuotient make_quotient(const TableRing& r, const Bitset& k);

// Exact file format: {"size": N, "zero": z, "unit": u-or-null,
// "add": [[...]xN], "mul": [[...]xN], "name": string}, 0-based indices.
std::string table_ring_to_json(const TableRing& r);
TableRing table_ring_from_json(const std::string& text);
TableRing load_table_ring(const std::string& path);
void save_table_ring(const TableRing& r, const std::string& path);

}  // namespace midealkit
