// Build one catalog surface and print its group data and real part.
#include "realhyp/realhyp.hpp"

#include <iostream>

using namespace realhyp;

int main(int argc, char** argv) {
    std::string id = argc > 1 ? argv[1] : "Z4-09";
    for (const auto& slot : builtin_catalog()) {
        if (slot.id != id) continue;
        RealHypSurface s = build_surface(slot, 0);
        auto ext = make_extended(s.G_gens, s.sigma);
        auto rp = analyze_real_part(s);
        std::cout << slot.id << ": G=" << to_string(ext.name_holo) << " G^=" << to_string(ext.name_full)
                  << (ext.split ? " split" : " non-split") << "\n";
        std::cout << "involutive lift classes: " << rp.lift_classes << ", fixed tori: " << rp.fixed_components
                  << "\n";
        std::cout << "real part: " << to_string(rp.topology) << " (expected " << to_string(slot.expected) << ")\n";
        return 0;
    }
    std::cerr << "unknown slot " << id << "\n";
    return 2;
}
