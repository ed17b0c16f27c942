#ifndef TOPOS_PRESHEAF_HPP
#define TOPOS_PRESHEAF_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "topos/fincat.hpp"

namespace topos {

// A finite-set-valued contravariant functor on a FinCat. Carrier elements are
// identified by index; names are kept for serialization and reports. For a
// morphism k : D -> C the action F(k) maps F(C) -> F(D), and functoriality
// reads F(compose(g,f)) = F(f) ∘ F(g).
class Presheaf {
public:
    Presheaf() = default;
    Presheaf(FinCatPtr base, std::vector<std::vector<std::string>> carriers,
             std::vector<std::vector<int>> actions);

    const FinCat& cat() const { return *base_; }
    const FinCatPtr& base() const { return base_; }

    int size(ObjId c) const { return static_cast<int>(carriers_[c].size()); }
    std::size_t total_size() const;
    bool empty() const { return total_size() == 0; }

    const std::vector<std::string>& carrier(ObjId c) const { return carriers_[c]; }
    const std::string& elem_name(ObjId c, int x) const { return carriers_[c][x]; }
    int elem_index(ObjId c, const std::string& name) const; // -1 if absent

    // F(k)(x) for x an index into F(cod k).
    int act(MorId k, int x) const { return actions_[k][x]; }
    const std::vector<int>& action(MorId k) const { return actions_[k]; }

    bool operator==(const Presheaf& other) const;

    // Checks functoriality; fills `why` with the first violation if given.
    bool functorial(std::string* why = nullptr) const;

private:
    FinCatPtr base_;
    std::vector<std::vector<std::string>> carriers_;
    std::vector<std::vector<int>> actions_;
};

bool same_base(const Presheaf& a, const Presheaf& b);

Presheaf constant_presheaf(FinCatPtr base, const std::vector<std::string>& elems);
Presheaf terminal_presheaf(FinCatPtr base);
Presheaf initial_presheaf(FinCatPtr base);

// Representable presheaf Y(c) = Hom(-, c); carrier names are morphism names.
Presheaf yoneda(FinCatPtr base, ObjId c);

struct NatTrans {
    Presheaf source;
    Presheaf target;
    std::vector<std::vector<int>> components; // per object: source index -> target index

    int at(ObjId c, int x) const { return components[c][x]; }
};

bool is_natural(const NatTrans& t, std::string* why = nullptr);
NatTrans identity_nat(const Presheaf& f);
NatTrans compose(const NatTrans& g, const NatTrans& f); // f first, then g
bool is_mono(const NatTrans& t);  // pointwise injective
bool is_epi(const NatTrans& t);   // pointwise surjective
bool is_iso(const NatTrans& t);
NatTrans inverse(const NatTrans& t);
NatTrans bang(const Presheaf& f); // unique map to the terminal presheaf

// All natural transformations F -> G in canonical (lexicographic) order.
// The component functions are enumerated per object in declaration order.
std::vector<NatTrans> hom_set(const Presheaf& f, const Presheaf& g,
                              std::size_t budget = kDefaultBudget);

// Natural transformations extending a partial component assignment
// (entries = -1 are free). Used for extension/retraction counting.
std::vector<NatTrans> nat_trans_extensions(const Presheaf& f, const Presheaf& g,
                                           const std::vector<std::vector<int>>& partial,
                                           std::size_t budget = kDefaultBudget);

// Exhaustive isomorphism search; nullopt when none exists.
std::optional<NatTrans> find_iso(const Presheaf& f, const Presheaf& g,
                                 std::size_t budget = kDefaultBudget);

// All object-indexed families stable under every action, canonical order.
std::vector<std::vector<int>> global_sections(const Presheaf& g);

// A subpresheaf given by per-object carrier subsets, closed under actions.
struct Subpresheaf {
    Presheaf ambient;
    std::vector<std::vector<char>> selected;

    bool contains(ObjId c, int x) const { return selected[c][x] != 0; }
    int count(ObjId c) const;
    std::size_t total_count() const;
    bool is_whole() const;
    bool action_closed() const;
};

bool sub_equal(const Subpresheaf& a, const Subpresheaf& b);
bool sub_leq(const Subpresheaf& a, const Subpresheaf& b); // a ⊆ b
Subpresheaf whole_subpresheaf(const Presheaf& f);
Subpresheaf empty_subpresheaf(const Presheaf& f);

// The least subpresheaf containing the given elements.
Subpresheaf subpresheaf_generated(const Presheaf& f, const std::vector<std::pair<ObjId, int>>& seeds);

// All subpresheaves of f, canonical order. Count is bounded by 2^total_size,
// enumerated by closing under actions; guarded by the budget.
std::vector<Subpresheaf> all_subpresheaves(const Presheaf& f, std::size_t budget = kDefaultBudget);

// A subpresheaf presented as an honest presheaf plus its inclusion.
struct SubPresentation {
    Presheaf object;
    NatTrans inclusion;                        // object -> ambient
    std::vector<std::vector<int>> to_ambient;  // per object: object index -> ambient index
    std::vector<std::vector<int>> from_ambient; // per object: ambient index -> object index or -1
};
SubPresentation present(const Subpresheaf& s);

Subpresheaf image_subpresheaf(const NatTrans& f);
Subpresheaf preimage_subpresheaf(const NatTrans& f, const Subpresheaf& m); // f⁻¹(m)

struct ImageFactorization {
    NatTrans epi;        // source -> image presheaf
    Subpresheaf image;   // of the target
    NatTrans mono;       // image presheaf -> target (inclusion)
};
ImageFactorization image_factorization(const NatTrans& f);

// Restriction of f to a subpresheaf of its source (corestricted nowhere).
NatTrans restrict_to_sub(const NatTrans& f, const SubPresentation& sub);

// Per-object equivalence relation compatible with all actions.
struct Congruence {
    Presheaf on;
    std::vector<std::vector<int>> cls; // per object: element -> class id (dense, canonical)
    int class_count(ObjId c) const;
    bool same(ObjId c, int x, int y) const { return cls[c][x] == cls[c][y]; }
};

// Least action-compatible equivalence containing the pairs.
Congruence generate_congruence(const Presheaf& f,
                               const std::vector<std::tuple<ObjId, int, int>>& pairs);

struct QuotientResult {
    Presheaf object;
    NatTrans projection;
};
QuotientResult quotient(const Presheaf& f, const Congruence& theta);

// Category of elements of B: objects are pairs (C, b ∈ B(C)); a morphism
// (C,b) -> (D,b') is a base morphism k : C -> D with B(k)(b') = b. Presheaves
// on this category correspond to objects of the slice over B.
struct ElementsCategory {
    Presheaf of;       // B
    FinCatPtr cat;     // the category of elements
    std::vector<std::pair<ObjId, int>> object_pair;  // elements object -> (C, b)
    std::vector<std::vector<ObjId>> object_of;       // (C, b) -> elements object
    std::vector<std::pair<MorId, int>> morphism_pair; // elements morphism -> (k, b' index at cod)

    ObjId obj(ObjId c, int b) const { return object_of[c][b]; }
};
ElementsCategory category_of_elements(const Presheaf& b);

} // namespace topos

#endif
