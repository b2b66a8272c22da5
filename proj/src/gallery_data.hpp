#pragma once

#include <vector>

namespace stillife {

// One catalogued pattern, stored as '#'/'.' text. `grid` is a finite window
// onto the plane; `torus` (nullable) is one fundamental domain of the
// periodic extension. Rows are newline-terminated; row r is x2 = r.
struct RawGalleryEntry {
    const char* name;
    const char* nb;  // "moore8" | "vn4" | "tri6"
    const char* grid;
    const char* torus;
    const char* note;
};

const std::vector<RawGalleryEntry>& raw_gallery();

// 28x9 fundamental domain of the period-7 transmission-line pattern.
const char* wire_torus_text();

}  // namespace stillife
