#include "topos/fincat.hpp"

#include <algorithm>
#include <set>

namespace topos {

ValidationResult validate_category(const RawCategory& raw) {
    ValidationResult result;
    auto fail = [&](std::string kind, std::string detail) {
        result.violations.push_back({std::move(kind), std::move(detail)});
    };

    auto cat = std::make_shared<FinCat>();
    FinCat& c = *cat;

    std::map<std::string, ObjId> obj_index;
    for (const auto& name : raw.objects) {
        if (obj_index.count(name)) {
            fail("DuplicateObject", "object '" + name + "' declared twice");
            continue;
        }
        obj_index[name] = static_cast<ObjId>(c.objects_.size());
        c.objects_.push_back(name);
    }

    std::map<std::string, MorId> mor_index;
    for (const auto& m : raw.morphisms) {
        if (mor_index.count(m[0])) {
            fail("DuplicateMorphism", "morphism '" + m[0] + "' declared twice");
            continue;
        }
        auto di = obj_index.find(m[1]);
        auto ci = obj_index.find(m[2]);
        if (di == obj_index.end()) {
            fail("UnknownObject", "morphism '" + m[0] + "' has undeclared dom '" + m[1] + "'");
            continue;
        }
        if (ci == obj_index.end()) {
            fail("UnknownObject", "morphism '" + m[0] + "' has undeclared cod '" + m[2] + "'");
            continue;
        }
        mor_index[m[0]] = static_cast<MorId>(c.morphisms_.size());
        c.morphisms_.push_back({m[0], di->second, ci->second});
    }
    if (!result.violations.empty()) return result;

    const int n_obj = c.object_count();
    const int n_mor = c.morphism_count();

    c.identity_.assign(n_obj, -1);
    for (const auto& [obj, mor] : raw.identities) {
        auto oi = obj_index.find(obj);
        auto mi = mor_index.find(mor);
        if (oi == obj_index.end()) {
            fail("UnknownObject", "identity entry for undeclared object '" + obj + "'");
            continue;
        }
        if (mi == mor_index.end()) {
            fail("MissingIdentity", "identity '" + mor + "' of '" + obj + "' is not declared");
            continue;
        }
        const MorRecord& rec = c.morphisms_[mi->second];
        if (rec.dom != oi->second || rec.cod != oi->second) {
            fail("MissingIdentity", "identity '" + mor + "' of '" + obj + "' is not an endomorphism of it");
            continue;
        }
        c.identity_[oi->second] = mi->second;
    }
    for (ObjId o = 0; o < n_obj; ++o)
        if (c.identity_[o] == -1)
            fail("MissingIdentity", "object '" + c.objects_[o] + "' has no identity");
    if (!result.violations.empty()) return result;

    // Composition table: identity-forced entries first, then declared pairs.
    c.table_.assign(n_mor, std::vector<MorId>(n_mor, -1));
    for (MorId m = 0; m < n_mor; ++m) {
        c.table_[c.identity_[c.morphisms_[m].cod]][m] = m;
        c.table_[m][c.identity_[c.morphisms_[m].dom]] = m;
    }
    for (const auto& entry : raw.composition) {
        auto gi = mor_index.find(entry[0]);
        auto fi = mor_index.find(entry[1]);
        auto ri = mor_index.find(entry[2]);
        if (gi == mor_index.end() || fi == mor_index.end() || ri == mor_index.end()) {
            fail("UnknownMorphism", "composition entry (" + entry[0] + "," + entry[1] + "," +
                                        entry[2] + ") references undeclared morphisms");
            continue;
        }
        MorId g = gi->second, f = fi->second, r = ri->second;
        if (c.morphisms_[f].cod != c.morphisms_[g].dom) {
            fail("CompositionNotTotal", "pair (" + entry[0] + "," + entry[1] + ") is not composable");
            continue;
        }
        if (c.morphisms_[r].dom != c.morphisms_[f].dom || c.morphisms_[r].cod != c.morphisms_[g].cod) {
            fail("CompositionNotTotal", "composite '" + entry[2] + "' of (" + entry[0] + "," +
                                            entry[1] + ") has wrong endpoints");
            continue;
        }
        if (c.table_[g][f] != -1 && c.table_[g][f] != r) {
            fail("CompositionNotTotal", "pair (" + entry[0] + "," + entry[1] +
                                            ") assigned two different composites");
            continue;
        }
        c.table_[g][f] = r;
    }
    if (!result.violations.empty()) return result;

    for (MorId g = 0; g < n_mor; ++g)
        for (MorId f = 0; f < n_mor; ++f)
            if (c.morphisms_[f].cod == c.morphisms_[g].dom && c.table_[g][f] == -1)
                fail("CompositionNotTotal", "no composite declared for (" +
                                                c.morphisms_[g].name + "," + c.morphisms_[f].name + ")");
    if (!result.violations.empty()) return result;

    // Identity laws. Forced entries above set them, but a declared entry may
    // have overridden one, e.g. compose(id_b, u) = id_a.
    for (MorId m = 0; m < n_mor; ++m) {
        MorId idc = c.identity_[c.morphisms_[m].cod];
        MorId idd = c.identity_[c.morphisms_[m].dom];
        if (c.table_[idc][m] != m)
            fail("AssociativityFailure", "identity law fails: compose(" + c.morphisms_[idc].name +
                                             "," + c.morphisms_[m].name + ") != " + c.morphisms_[m].name);
        if (c.table_[m][idd] != m)
            fail("AssociativityFailure", "identity law fails: compose(" + c.morphisms_[m].name +
                                             "," + c.morphisms_[idd].name + ") != " + c.morphisms_[m].name);
    }

    for (MorId h = 0; h < n_mor; ++h)
        for (MorId g = 0; g < n_mor; ++g) {
            if (c.morphisms_[g].cod != c.morphisms_[h].dom) continue;
            for (MorId f = 0; f < n_mor; ++f) {
                if (c.morphisms_[f].cod != c.morphisms_[g].dom) continue;
                MorId left = c.table_[c.table_[h][g]][f];
                MorId right = c.table_[h][c.table_[g][f]];
                if (left != right)
                    fail("AssociativityFailure", "triple (" + c.morphisms_[h].name + "," +
                                                     c.morphisms_[g].name + "," + c.morphisms_[f].name +
                                                     "): (hg)f=" + c.morphisms_[left].name +
                                                     " but h(gf)=" + c.morphisms_[right].name);
            }
        }
    if (!result.violations.empty()) return result;

    c.into_.assign(n_obj, {});
    c.from_.assign(n_obj, {});
    for (MorId m = 0; m < n_mor; ++m) {
        c.into_[c.morphisms_[m].cod].push_back(m);
        c.from_[c.morphisms_[m].dom].push_back(m);
    }
    c.object_index_ = std::move(obj_index);
    c.morphism_index_ = std::move(mor_index);

    result.category = cat;
    return result;
}

FinCatPtr make_category(const RawCategory& raw) {
    ValidationResult r = validate_category(raw);
    if (!r.ok()) {
        std::string msg = "invalid category:";
        for (const auto& v : r.violations) msg += "\n  [" + v.kind + "] " + v.detail;
        throw AxiomViolation(msg);
    }
    return r.category;
}

bool Sieve::contains(MorId m) const {
    return std::binary_search(members.begin(), members.end(), m);
}

Sieve empty_sieve(ObjId c) { return Sieve{c, {}}; }

Sieve maximal_sieve(const FinCat& cat, ObjId c) {
    return Sieve{c, cat.morphisms_into(c)};
}

bool is_sieve(const FinCat& cat, const Sieve& s) {
    for (MorId f : s.members) {
        if (cat.cod(f) != s.at) return false;
        for (MorId g : cat.morphisms_into(cat.dom(f)))
            if (!s.contains(cat.compose(f, g))) return false;
    }
    return true;
}

std::vector<Sieve> sieves_on(const FinCat& cat, ObjId c) {
    if (c < 0 || c >= cat.object_count()) throw UnknownObject("sieves_on: bad object index");
    const auto& into = cat.morphisms_into(c);
    const std::size_t n = into.size();
    if (n > 20) throw BudgetExceeded("sieves_on: too many morphisms into object");
    std::vector<Sieve> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Sieve s{c, {}};
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.members.push_back(into[i]);
        std::sort(s.members.begin(), s.members.end());
        if (is_sieve(cat, s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Sieve& a, const Sieve& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

Sieve pullback_sieve(const FinCat& cat, const Sieve& s, MorId h) {
    if (cat.cod(h) != s.at)
        throw CodomainMismatch("pullback_sieve: cod(h) is not the sieve's object");
    Sieve out{cat.dom(h), {}};
    for (MorId g : cat.morphisms_into(cat.dom(h)))
        if (s.contains(cat.compose(h, g))) out.members.push_back(g);
    std::sort(out.members.begin(), out.members.end());
    return out;
}

Sieve intersect_sieves(const Sieve& a, const Sieve& b) {
    Sieve out{a.at, {}};
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::back_inserter(out.members));
    return out;
}

bool sieve_subset(const Sieve& a, const Sieve& b) {
    return std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end());
}

FinCatPtr monoid_as_category(const MonoidPresentation& m, const std::string& object_name) {
    const int n = static_cast<int>(m.elements.size());
    int unit = -1;
    for (int i = 0; i < n; ++i)
        if (m.elements[i] == m.unit) unit = i;
    if (unit < 0) throw AxiomViolation("monoid unit is not among the elements");
    if (static_cast<int>(m.mult.size()) != n)
        throw AxiomViolation("monoid multiplication table has wrong shape");

    RawCategory raw;
    raw.objects = {object_name};
    for (const auto& e : m.elements) raw.morphisms.push_back({e, object_name, object_name});
    raw.identities = {{object_name, m.unit}};
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m.mult[i].size()) != n)
            throw AxiomViolation("monoid multiplication table has wrong shape");
        for (int j = 0; j < n; ++j) {
            int k = m.mult[i][j];
            if (k < 0 || k >= n) throw AxiomViolation("monoid table entry out of range");
            raw.composition.push_back({m.elements[i], m.elements[j], m.elements[k]});
        }
    }
    return make_category(raw); // associativity and unit laws checked there
}

} // namespace topos
