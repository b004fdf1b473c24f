#pragma once

// Hand-picked transvectant chains, grouped by the degree n of the ground form.
// Each entry is nonzero on a generic form; order 0 entries are invariants.
// For the septimic, psi = (f,f)_6, psi1 = (f,f)_2, psi2 = (f,f)_4 and
// psi3 = (psi2,psi2)_4.

#include "hsop/chain.hpp"

#include <string>
#include <vector>

namespace hsop {

struct CatalogEntry {
    int n;
    std::string name;
    std::string chain;
    int degree;
    int order;

    InvariantChain parse() const { return InvariantChain::parse(chain); }
    bool is_invariant() const { return order == 0; }
};

namespace detail {

#define HSOP_PSI "(f,f)_6"
#define HSOP_PSI1 "(f,f)_2"
#define HSOP_PSI2 "(f,f)_4"
#define HSOP_PSI3 "((f,f)_4,(f,f)_4)_4"

inline std::vector<CatalogEntry> build_catalog() {
    return {
        {2, "disc", "(f,f)_2", 2, 0},
        {2, "disc^2", "(f,f)_2^2", 4, 0},
        {2, "disc^3", "(f,f)_2^3", 6, 0},

        {3, "hessian", "(f,f)_2", 2, 2},
        {3, "i4", "((f,f)_2,(f,f)_2)_2", 4, 0},
        {3, "i4^2", "((f,f)_2,(f,f)_2)_2^2", 8, 0},

        {4, "i2", "(f,f)_4", 2, 0},
        {4, "i3", "(f,(f,f)_2)_4", 3, 0},
        {4, "i4", "((f,f)_2,(f,f)_2)_4", 4, 0},
        {4, "i5", "(f,((f,f)_2,(f,f)_2)_2)_4", 5, 0},
        {4, "i6", "((f,f)_2,((f,f)_2,(f,f)_2)_2)_4", 6, 0},
        {4, "i7", "((f,(f,f)_2)_2,((f,f)_2,(f,f)_2)_2)_4", 7, 0},

        {5, "i", "(f,f)_4", 2, 2},
        {5, "i4", "((f,f)_2,(f,f)_2)_6", 4, 0},
        {5, "i8", "(((f,f)_2,(f,f)_2)_4,((f,f)_2,(f,f)_2)_4)_4", 8, 0},
        {5, "i12", "(((f,f)_2,(f,f)_2)_4,(((f,f)_2,(f,f)_2)_4,((f,f)_2,(f,f)_2)_4)_2)_4", 12, 0},
        {5, "i18",
         "((f,f)_2,((((f,f)_2,(f,f)_2)_4,((f,f)_2,(f,f)_2)_4)_2,"
         "(((f,f)_2,(f,f)_2)_4,((f,f)_2,(f,f)_4)_1)_2)_2)_6",
         18, 0},

        {6, "i2", "(f,f)_6", 2, 0},
        {6, "i4", "((f,f)_4,(f,f)_4)_4", 4, 0},
        {6, "i6", "((f,f)_4,((f,f)_4,(f,f)_4)_2)_4", 6, 0},
        {6, "i10", "((f,f)_4,(((f,f)_4,(f,f)_4)_2,((f,f)_4,(f,f)_4)_2)_2)_4", 10, 0},
        {6, "i15",
         "((f,((f,f)_4,(f,f)_4)_2)_4,((f,(f,f)_4)_2,((f,(f,f)_4)_2,((f,f)_4,(f,f)_4)_2)_2)_5)_2",
         15, 0},

        {7, "psi", HSOP_PSI, 2, 2},
        {7, "psi1", HSOP_PSI1, 2, 10},
        {7, "psi2", HSOP_PSI2, 2, 6},
        {7, "psi3", HSOP_PSI3, 4, 4},
        {7, "i4", "(" HSOP_PSI "," HSOP_PSI ")_2", 4, 0},
        {7, "(psi2,psi^3)_6", "(" HSOP_PSI2 "," HSOP_PSI "^3)_6", 8, 0},
        {7, "(psi3,psi^2)_4", "(" HSOP_PSI3 "," HSOP_PSI "^2)_4", 8, 0},
        {7, "(psi1,psi^5)_10", "(" HSOP_PSI1 "," HSOP_PSI "^5)_10", 12, 0},
        {7, "((psi2,psi3)_1,psi^4)_8", "((" HSOP_PSI2 "," HSOP_PSI3 ")_1," HSOP_PSI "^4)_8", 14, 0},
        {7, "(f*(f,psi2)_5,psi^5)_10", "(f*(f," HSOP_PSI2 ")_5," HSOP_PSI "^5)_10", 14, 0},
        {7, "((psi1,psi2)_1,psi^7)_14", "((" HSOP_PSI1 "," HSOP_PSI2 ")_1," HSOP_PSI "^7)_14", 18, 0},
        {7, "(f*((f,psi2)_5,psi2)_2,psi^6)_12", "(f*((f," HSOP_PSI2 ")_5," HSOP_PSI2 ")_2," HSOP_PSI "^6)_12", 18, 0},

        {8, "i2", "(f,f)_8", 2, 0},
        {8, "i3", "(f,(f,f)_4)_8", 3, 0},
        {8, "i4", "((f,f)_4,(f,f)_4)_8", 4, 0},
        {8, "i5", "(f,((f,f)_4,(f,f)_4)_4)_8", 5, 0},
        {8, "i6", "((f,f)_4,((f,f)_4,(f,f)_4)_4)_8", 6, 0},
        {8, "i7", "((f,(f,f)_4)_4,((f,f)_4,(f,f)_4)_4)_8", 7, 0},
        {8, "i8", "(((f,f)_4,(f,f)_4)_4,((f,f)_4,(f,f)_4)_4)_8", 8, 0},
        {8, "i9", "(f,(((f,f)_4,(f,f)_4)_4,((f,f)_4,(f,f)_4)_4)_4)_8", 9, 0},
        {8, "i10", "((f,f)_4,(((f,f)_4,(f,f)_4)_4,((f,f)_4,(f,f)_4)_4)_4)_8", 10, 0},
    };
}

#undef HSOP_PSI
#undef HSOP_PSI1
#undef HSOP_PSI2
#undef HSOP_PSI3

}  // namespace detail

inline const std::vector<CatalogEntry>& invariant_catalog() {
    static const std::vector<CatalogEntry> all = detail::build_catalog();
    return all;
}

inline std::vector<CatalogEntry> catalog_for(int n) {
    std::vector<CatalogEntry> out;
    for (const auto& e : invariant_catalog())
        if (e.n == n) out.push_back(e);
    return out;
}

/// Looks up an entry by (n, name); nullptr when absent.
inline const CatalogEntry* find_catalog_entry(int n, const std::string& name) {
    for (const auto& e : invariant_catalog())
        if (e.n == n && e.name == name) return &e;
    return nullptr;
}

}  // namespace hsop
