#pragma once

#include <cstdlib>
#include <string>

namespace burnside {

// Size limits, overridable through environment variables so batch runs can
// raise them without a rebuild.
struct Caps {
    int group_order = 200;        // BURNSIDE_ORDER_CAP
    int subgroup_count = 10000;   // BURNSIDE_SUBGROUP_CAP
    int amitsur_degree = 3;       // BURNSIDE_DEGREE_CAP
    long point_count = 400000;    // BURNSIDE_POINT_CAP
    long gmap_count = 200000;     // BURNSIDE_GMAP_CAP

    static Caps from_env() {
        Caps c;
        auto rd = [](const char* k, long& slot) {
            if (const char* v = std::getenv(k)) slot = std::atol(v);
        };
        long go = c.group_order, sc = c.subgroup_count, ad = c.amitsur_degree;
        rd("BURNSIDE_ORDER_CAP", go);
        rd("BURNSIDE_SUBGROUP_CAP", sc);
        rd("BURNSIDE_DEGREE_CAP", ad);
        rd("BURNSIDE_POINT_CAP", c.point_count);
        rd("BURNSIDE_GMAP_CAP", c.gmap_count);
        c.group_order = (int)go;
        c.subgroup_count = (int)sc;
        c.amitsur_degree = (int)ad;
        return c;
    }
};

const Caps& caps();
void set_caps(const Caps& c);

}  // namespace burnside
