#ifndef TOPOS_FINCAT_HPP
#define TOPOS_FINCAT_HPP

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "topos/common.hpp"

namespace topos {

using ObjId = int;
using MorId = int;

struct MorRecord {
    std::string name;
    ObjId dom = -1;
    ObjId cod = -1;
    bool operator==(const MorRecord&) const = default;
};

// A finite category: object list, morphism table, identity assignment and a
// total composition table on composable pairs. `compose(g, f)` means
// "f first, then g", so it is defined exactly when cod(f) = dom(g).
// Instances are immutable once validated; build them through
// validate_category().
class FinCat {
public:
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<MorRecord>& morphisms() const { return morphisms_; }
    int object_count() const { return static_cast<int>(objects_.size()); }
    int morphism_count() const { return static_cast<int>(morphisms_.size()); }

    const std::string& object_name(ObjId c) const { return objects_[c]; }
    ObjId dom(MorId m) const { return morphisms_[m].dom; }
    ObjId cod(MorId m) const { return morphisms_[m].cod; }
    const std::string& morphism_name(MorId m) const { return morphisms_[m].name; }

    MorId identity(ObjId c) const { return identity_[c]; }
    bool is_identity(MorId m) const { return identity_[morphisms_[m].dom] == m; }

    bool composable(MorId g, MorId f) const { return cod(f) == dom(g); }

    // f first, then g.
    MorId compose(MorId g, MorId f) const {
        if (!composable(g, f))
            throw CodomainMismatch("compose(" + morphism_name(g) + ", " + morphism_name(f) +
                                   "): cod(f) != dom(g)");
        return table_[g][f];
    }

    const std::vector<MorId>& morphisms_into(ObjId c) const { return into_[c]; }
    const std::vector<MorId>& morphisms_from(ObjId c) const { return from_[c]; }

    // Hom(d, c) in declaration order.
    std::vector<MorId> hom(ObjId d, ObjId c) const {
        std::vector<MorId> out;
        for (MorId m : into_[c])
            if (dom(m) == d) out.push_back(m);
        return out;
    }

    ObjId object_index(const std::string& name) const {
        auto it = object_index_.find(name);
        if (it == object_index_.end()) throw UnknownObject("unknown object '" + name + "'");
        return it->second;
    }
    MorId morphism_index(const std::string& name) const {
        auto it = morphism_index_.find(name);
        if (it == morphism_index_.end()) throw UnknownMorphism("unknown morphism '" + name + "'");
        return it->second;
    }

    bool operator==(const FinCat& other) const {
        return objects_ == other.objects_ && morphisms_ == other.morphisms_ &&
               identity_ == other.identity_ && table_ == other.table_;
    }

private:
    friend struct ValidationResult;
    friend ValidationResult validate_category(const struct RawCategory&);

    std::vector<std::string> objects_;
    std::vector<MorRecord> morphisms_;
    std::vector<MorId> identity_;             // per object
    std::vector<std::vector<MorId>> table_;   // table_[g][f] = g∘f, -1 if not composable
    std::vector<std::vector<MorId>> into_;    // per object: morphisms with that codomain
    std::vector<std::vector<MorId>> from_;    // per object: morphisms with that domain
    std::map<std::string, ObjId> object_index_;
    std::map<std::string, MorId> morphism_index_;
};

using FinCatPtr = std::shared_ptr<const FinCat>;

// Raw, unchecked category description as it appears in input files. The
// composition list may omit identity-forced pairs; validation completes them.
struct RawCategory {
    std::vector<std::string> objects;
    std::vector<std::array<std::string, 3>> morphisms;    // name, dom, cod
    std::vector<std::pair<std::string, std::string>> identities; // object -> morphism
    std::vector<std::array<std::string, 3>> composition;  // g, f, g∘f
};

struct LawViolation {
    std::string kind;   // MissingIdentity | CompositionNotTotal | AssociativityFailure | ...
    std::string detail; // names the offending data
};

struct ValidationResult {
    FinCatPtr category; // null unless violations is empty
    std::vector<LawViolation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationResult validate_category(const RawCategory& raw);

// Convenience wrapper that throws AxiomViolation listing all violations.
FinCatPtr make_category(const RawCategory& raw);

// A sieve on `at`: a precomposition-closed set of morphisms with codomain
// `at`. Members are kept sorted so sieves compare canonically.
struct Sieve {
    ObjId at = -1;
    std::vector<MorId> members;

    bool contains(MorId m) const;
    auto operator<=>(const Sieve&) const = default;
};

Sieve empty_sieve(ObjId c);
Sieve maximal_sieve(const FinCat& cat, ObjId c);
bool is_sieve(const FinCat& cat, const Sieve& s);

// All sieves on c in canonical order (by size, then member indices).
std::vector<Sieve> sieves_on(const FinCat& cat, ObjId c);

// For h : D -> C and s a sieve on C, the sieve { g into D | h∘g ∈ s } on D.
Sieve pullback_sieve(const FinCat& cat, const Sieve& s, MorId h);

Sieve intersect_sieves(const Sieve& a, const Sieve& b);
bool sieve_subset(const Sieve& a, const Sieve& b); // a ⊆ b

struct MonoidPresentation {
    std::vector<std::string> elements;
    std::string unit;
    std::vector<std::vector<int>> mult; // mult[i][j] = index of elements[i]*elements[j]
};

// One-object category whose morphisms are the monoid elements and whose
// composition is the multiplication; throws AxiomViolation on a bad table.
FinCatPtr monoid_as_category(const MonoidPresentation& m, const std::string& object_name = "*");

} // namespace topos

#endif
