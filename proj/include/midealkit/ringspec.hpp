#pragma once

/*
 * The textual ring grammar shared by the CLI and replay machinery:
 *
 *   zn:<n>                       cyclic ring Z_n in CRT form
 *   prod:<spec>,<spec>,...       direct product (factors split at commas)
 *   mat:<k>:<spec>               k x k matrix ring over <spec> (greedy tail)
 *   table:<path>                 table-ring JSON file
 *   quot:<spec>/<ideal>          quotient (ideal = text after the last '/')
 *
 * Ideal arguments: a single generator integer for rings with pairwise
 * distinct primes; a comma list with one generator per product leaf for
 * structured products; a comma list of element indices (closed up to an
 * ideal) for table rings.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "midealkit/classify.hpp"
#include "midealkit/lattice.hpp"

namespace midealkit {

struct RingSpecError : std::runtime_error {
    RingSpecError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

struct RingSpecNode {
    enum class Kind { Zn, Prod, Mat, Table, Quot };
    Kind kind{};
    std::int64_t n = 0;                   // Zn
    int k = 0;                            // Mat
    std::string path;                     // Table
    std::vector<RingSpecNode> children;   // Prod factors; Mat/Quot base
    std::string quot_ideal;               // Quot
    std::string text;                     // original spelling
};

RingSpecNode parse_ring_spec(const std::string& text);

struct Caps {
    std::int64_t table_elements = kDefaultTableCap;
    int lattice_ideals = kDefaultLatticeCap;
    // MIDEALKIT_CAP="E" or "E,L" overrides the element / lattice caps.
    static Caps from_env();
};

// A realized ring of either representation with its lattice built on
// demand.  Structured rings remember their product-leaf layout so ideal
// arguments can be written one generator per leaf.
class RingHandle {
public:
    static RingHandle realize(const std::string& spec, const Caps& caps = Caps::from_env());
    static RingHandle realize(const RingSpecNode& node, const Caps& caps = Caps::from_env());
    static RingHandle wrap(StructuredRing r, const Caps& caps = Caps::from_env());
    static RingHandle wrap(TableRing r, const Caps& caps = Caps::from_env());

    bool is_structured() const { return structured_.has_value(); }
    const StructuredRing& structured() const { return *structured_; }
    const TableRing& table() const { return *table_; }
    const std::string& spec_text() const { return spec_text_; }

    const ChainProductLattice& chain_lattice() const;
    const MaskLattice& mask_lattice() const;

    // Parses an ideal argument; returns the lattice id in the ring's own
    // lattice.
    int parse_ideal(const std::string& text) const;
    std::string ideal_label(int id) const;

    struct Leaf {
        FactoredInteger modulus;
        int first_component = 0;
    };
    const std::vector<Leaf>& leaves() const { return leaves_; }

private:
    std::optional<StructuredRing> structured_;
    std::optional<TableRing> table_;
    std::vector<Leaf> leaves_;
    std::string spec_text_;
    Caps caps_;
    mutable std::shared_ptr<ChainProductLattice> chain_;
    mutable std::shared_ptr<MaskLattice> mask_;
};

}  // namespace midealkit
