// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilsum {

/// Hard cap on materialized rings (tables are size^2 entries).
inline constexpr std::uint32_t kMaxRingSize = 2048;
/// Exhaustive ring-axiom verification and ideal enumeration stop here;
/// larger rings get sampled axiom checks and skip the ideal items.
inline constexpr std::uint32_t kExhaustiveBound = 256;

/// A finite ring with identity, materialized as addition/multiplication
/// tables over element indices 0..size-1. Ring axioms are verified at
/// construction: exhaustively up to kExhaustiveBound elements, by seeded
/// random sampling above. Immutable after construction; analyses may be
/// shared read-only across threads.
class FiniteRing {
public:
    static FiniteRing zmod(std::uint32_t m, std::uint64_t sample_seed = 0);
    static FiniteRing galois(std::uint32_t p, std::uint32_t k,
                             std::uint64_t sample_seed = 0);
    static FiniteRing matrix_ring(std::uint32_t n, const FiniteRing& base,
                                  std::uint64_t sample_seed = 0);
    static FiniteRing upper_triangular(std::uint32_t n, const FiniteRing& base,
                                       std::uint64_t sample_seed = 0);
    static FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b,
                                     std::uint64_t sample_seed = 0);
    /// base[x] modulo a monic polynomial, coefficients (low-to-high) given
    /// as base-element indices; base must be commutative.
    static FiniteRing quotient_poly(const FiniteRing& base,
                                    const std::vector<std::uint16_t>& poly,
                                    std::uint64_t sample_seed = 0);
    /// Quotient by a two-sided ideal, given as a membership mask.
    static FiniteRing quotient(const FiniteRing& r, const std::vector<bool>& ideal);

    std::uint32_t size() const { return size_; }
    std::uint16_t zero() const { return zero_; }
    std::uint16_t one() const { return one_; }
    std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
        return add_[static_cast<std::size_t>(a) * size_ + b];
    }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
        return mul_[static_cast<std::size_t>(a) * size_ + b];
    }
    std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
    std::uint16_t sub(std::uint16_t a, std::uint16_t b) const {
        return add(a, neg(b));
    }

    const std::string& name() const { return name_; }
    const std::string& element_name(std::uint16_t i) const { return names_[i]; }

    /// For quotient rings: the canonical representative of each coset in
    /// the original ring, indexed by quotient element. Empty otherwise.
    const std::vector<std::uint16_t>& coset_reps() const { return coset_reps_; }
    /// For quotient rings: maps original elements to quotient elements.
    const std::vector<std::uint16_t>& projection() const { return projection_; }

private:
    FiniteRing() = default;
    static FiniteRing from_tables(std::string name, std::uint32_t size,
                                  std::vector<std::uint16_t> add,
                                  std::vector<std::uint16_t> mul,
                                  std::uint16_t zero, std::uint16_t one,
                                  std::vector<std::string> names,
                                  std::uint64_t sample_seed);
    void verify_axioms(std::uint64_t sample_seed) const;

    std::string name_;
    std::uint32_t size_ = 0;
    std::vector<std::uint16_t> add_, mul_, neg_;
    std::uint16_t zero_ = 0, one_ = 0;
    std::vector<std::string> names_;
    std::vector<std::uint16_t> coset_reps_, projection_;
};

struct RingAnalysis {
    std::vector<std::uint32_t> nil_index;  // 0 when not nilpotent
    std::vector<std::uint16_t> inverse;    // kNoInverse when not a unit
    std::vector<bool> unit, central, jacobson;
    std::vector<std::uint16_t> nilpotents, units, center, central_units,
        jacobson_elements;
    bool commutative = false;
    std::uint32_t max_nil_index = 1;

    static constexpr std::uint16_t kNoInverse = 0xFFFF;
    bool is_central_unit(std::uint16_t a) const { return central[a] && unit[a]; }
};

/// Nilpotents by iterated powers, units by exhaustive two-sided inverse
/// search, center by exhaustive commutation, Jacobson radical as
/// {x : 1 - r*x is a unit for every r}.
RingAnalysis analyze(const FiniteRing& r);

struct NilSumReport {
    bool holds = false;
    std::optional<std::uint16_t> counterexample;
    // For each element that is not a central unit and decomposes: (a, b, a-b).
    std::vector<std::array<std::uint16_t, 3>> witnesses;
};

/// Does every element that is not a central unit split into two
/// nilpotents?
NilSumReport has_two_nil_sum_property(const FiniteRing& r, const RingAnalysis& an);

inline constexpr std::uint32_t kInfiniteIndex = 0xFFFFFFFFu;

/// Type (p, q): every non-central-unit splits as b + c with b^p = 0 and
/// c^q = 0; q = kInfiniteIndex only requires c nilpotent.
bool has_type(const FiniteRing& r, const RingAnalysis& an, std::uint32_t p,
              std::uint32_t q);

struct TypeSignature {
    // Minimal valid (p, q) pairs; an antichain under the product order.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

/// Sweeps p, q up to the ring's maximal nilpotency index (beyond which
/// the conditions saturate, which also covers q = infinity) and keeps the
/// minimal valid pairs.
TypeSignature minimal_types(const FiniteRing& r, const RingAnalysis& an);

/// All two-sided ideals, as membership masks, built from principal-ideal
/// closures summed pairwise to a fixed point. Includes {0} and R.
/// Requires size <= kExhaustiveBound.
std::vector<std::vector<bool>> enumerate_ideals(const FiniteRing& r);

enum class CheckResult { Pass, Fail, Skipped };

struct ConsistencyChecklist {
    bool applicable = false;  // the ring has the 2-nil-sum property
    CheckResult central_nonunits_nilpotent = CheckResult::Skipped;  // (1a)
    CheckResult center_local = CheckResult::Skipped;                // (1b)
    CheckResult ideals_central_nilpotent = CheckResult::Skipped;    // (2)
    CheckResult ideals_in_jacobson = CheckResult::Skipped;          // (3)
    CheckResult jacobson_nil_central = CheckResult::Skipped;        // (4)
    CheckResult quotient_units_lift = CheckResult::Skipped;         // (5)
    bool ideal_items_skipped = false;  // size over the enumeration bound

    bool passed() const {
        auto ok = [](CheckResult c) { return c != CheckResult::Fail; };
        return ok(central_nonunits_nilpotent) && ok(center_local) &&
               ok(ideals_central_nilpotent) && ok(ideals_in_jacobson) &&
               ok(jacobson_nil_central) && ok(quotient_units_lift);
    }
};

/// Consistency checks that hold in any ring with the 2-nil-sum property:
/// central non-units are nilpotent and the center is local; every proper
/// ideal sits inside the center, the nilpotents, and the Jacobson
/// radical; the radical is nil and central; central units of quotients
/// lift. Vacuous (all items skipped) when the property fails.
ConsistencyChecklist consistency_checklist(const FiniteRing& r, const RingAnalysis& an);

struct StructureVerdict {
    bool property_holds = false;
    bool commutative = false;
    bool local = false;
    bool jacobson_nil = false;
    bool consistent = false;  // property_holds == (commutative && local && jacobson_nil)
};

/// The finite-ring structure test: the 2-nil-sum property holds iff the
/// ring is commutative, local, and has nil Jacobson radical. Any
/// inconsistency indicates an implementation bug.
StructureVerdict check_structure_theorem(const FiniteRing& r, const RingAnalysis& an);
StructureVerdict check_structure_theorem(const FiniteRing& r);

struct TypeFinding {
    std::string ring;
    std::uint32_t p, q;
};

/// Scans a corpus for noncommutative rings of type (p, q). Reports
/// findings; asserts nothing.
std::vector<TypeFinding> search_noncommutative_type(
    const std::vector<FiniteRing>& corpus, std::uint32_t p, std::uint32_t q);

/// Ring spec grammar (one per line in corpus configs):
///   zmod m | gf p k | matrix n <ring> | uppertri n <ring>
///   | product <ring> <ring> | quotientpoly <ring> c0 .. cd
FiniteRing parse_ring_spec(const std::string& spec, std::uint64_t sample_seed = 0);

/// Parses a corpus config: one ring spec per line, '#' comments and blank
/// lines ignored. ParseError messages carry the line number.
std::vector<FiniteRing> parse_corpus_config(std::istream& in,
                                            std::uint64_t sample_seed = 0);

/// The shipped corpus: Z/2..Z/16, GF(2), GF(3), GF(4), GF(5),
/// GF(2)[x]/(x^2), GF(2)[x]/(x^3), Z/2 x Z/2, M_2(GF(2)), M_2(GF(3)),
/// T_2(GF(2)), T_2(GF(3)).
std::vector<FiniteRing> default_corpus();

} // namespace nilsum
