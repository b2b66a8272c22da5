#include "gallery_data.hpp"

namespace stillife {

// Exhibits transcribed from printed figures. Grid entries are finite windows
// onto the plane; torus entries are wrap-consistent periodic extracts (the
// torus text wraps to the same local picture everywhere). Six-neighbor
// entries are stored on axial coordinates and carry tri6 adjacency.
const std::vector<RawGalleryEntry>& raw_gallery() {
    static const std::vector<RawGalleryEntry> entries = {
        {"chicken_wire", "moore8",
            "..##..###.....##...\n"
            "##..##...#####..###\n"
            "..##..###.....##...\n"
            "##..##...#####..###\n"
            "..##..###.....##...\n"
            "##..##...#####..###\n"
            "..##..###.....##...\n"
            "##..##...#####..###\n"
            "..##..###.....##...\n"
            "##..##...#####..###\n"
            "..##..###.....##...\n"
            "##..##...#####..###\n"
            "..##..###.....##...\n"
            "##..##...#####..###\n"
            "..##..###.....##...\n"
            "##..##...#####..###\n"
            "..##..###.....##...\n"
            "##..##...#####..###\n"
            "..##..###.....##...\n",
            "..##..###.....##.\n"
            "##..##...#####..#\n",
            "rows of shifted dominoes"},
        {"tv_static", "moore8",
            "....####.....####..\n"
            "###....#####....###\n"
            "..####.....####....\n"
            "#....#####....####.\n"
            "####.....####....#.\n"
            "...#####....####.#.\n"
            "##.....####....#.#.\n"
            ".#####....####.#.##\n"
            ".....####....#.#..#\n"
            "####....####.#.##.#\n"
            "...####....#.#..#.#\n"
            "##....####.#.##.#..\n"
            ".####....#.#..#.###\n"
            "....####.#.##.#....\n"
            "###....#.#..#.####.\n"
            "..####.#.##.#....##\n"
            "#....#.#..#.####...\n"
            "####.#.##.#....####\n"
            "...#.#..#.####....#\n",
            nullptr,
            "quasiperiodic domino rows"},
        {"onion_rings_3", "moore8",
            "#.#.#..#.#.##.#.#..\n"
            "..#.####.#....#.###\n"
            "###......######....\n"
            "...######......####\n"
            "##.#....#.####.#...\n"
            ".#.#.##.#.#..#.#.##\n"
            ".#.#.##.#.#..#.#.##\n"
            "##.#....#.####.#...\n"
            "...######......####\n"
            "###......######....\n"
            "..#.####.#....#.###\n"
            "#.#.#..#.#.##.#.#..\n"
            "#.#.#..#.#.##.#.#..\n"
            "..#.####.#....#.###\n"
            "###......######....\n"
            "...######......####\n"
            "##.#....#.####.#...\n"
            ".#.#.##.#.#..#.#.##\n"
            ".#.#.##.#.#..#.#.##\n"
            "##.#....#.####.#...\n",
            "#.#.#..#.#.#\n"
            "..#.####.#..\n"
            "###......###\n"
            "...######...\n"
            "##.#....#.##\n"
            ".#.#.##.#.#.\n"
            ".#.#.##.#.#.\n"
            "##.#....#.##\n"
            "...######...\n"
            "###......###\n"
            "..#.####.#..\n"
            "#.#.#..#.#.#\n",
            "nested ring blocks, order 3"},
        {"onion_bulbs_2", "moore8",
            "#.##.#..#.##.#..#.#\n"
            "#....####....####..\n"
            ".####....####....##\n"
            "#....####....####..\n"
            ".####....####....##\n"
            ".#..#.##.#..#.##.#.\n"
            ".#..#.##.#..#.##.#.\n"
            ".####....####....##\n"
            "#....####....####..\n"
            ".####....####....##\n"
            "#....####....####..\n"
            ".####....####....##\n"
            ".#..#.##.#..#.##.#.\n"
            ".#..#.##.#..#.##.#.\n"
            ".####....####....##\n"
            "#....####....####..\n"
            ".####....####....##\n"
            "#....####....####..\n"
            "#.##.#..#.##.#..#.#\n"
            "#.##.#..#.##.#..#.#\n",
            "#.##.#..\n"
            "#....###\n"
            ".####...\n"
            "#....###\n"
            ".####...\n"
            ".#..#.##\n"
            ".#..#.##\n"
            ".####...\n"
            "#....###\n"
            ".####...\n"
            "#....###\n"
            ".####...\n"
            ".#..#.##\n"
            ".#..#.##\n"
            ".####...\n"
            "#....###\n"
            ".####...\n"
            "#....###\n"
            "#.##.#..\n",
            "bulb rows, order 2"},
        {"hoey_1", "moore8",
            ".#...#.#...#.#...#.#\n"
            "..####..####..####..\n"
            "#.#...#.#...#.#...#.\n"
            "#..####..####..####.\n"
            ".#.#...#.#...#.#...#\n"
            "##..####..####..####\n"
            "..#.#...#.#...#.#...\n"
            "###..####..####..###\n"
            "...#.#...#.#...#.#..\n"
            "####..####..####..##\n"
            "....#.#...#.#...#.#.\n"
            "#####..####..####..#\n"
            "#....#.#...#.#...#.#\n"
            ".#####..####..####..\n"
            ".#....#.#...#.#...#.\n"
            "..#####..####..####.\n"
            "#.#....#.#...#.#...#\n"
            "#..#####..####..####\n"
            ".#.#....#.#...#.#...\n"
            "##..#####..####..###\n",
            nullptr,
            "mixed-order rings and waves"},
        {"hoey_2", "moore8",
            "....#....#....#....\n"
            "####.####.####.####\n"
            "#..#.#..#.#..#.#..#\n"
            "#.#..#.#..#.#..#.#.\n"
            "#.####.####.####.##\n"
            ".#....#....#....#..\n"
            ".#.##.#.##.#.##.#.#\n"
            ".#.##.#.##.#.##.#.#\n"
            ".#....#....#....#..\n"
            "#.####.####.####.##\n"
            "#.#..#.#..#.#..#.#.\n"
            "..#.#..#.#..#.#..#.\n"
            "###.####.####.####.\n"
            "...#....#....#....#\n"
            "##.#.##.#.##.#.##.#\n"
            "##.#.##.#.##.#.##.#\n"
            "...#....#....#....#\n"
            "###.####.####.####.\n"
            "..#.#..#.#..#.#..#.\n"
            ".#..#.#..#.#..#.#..\n",
            nullptr,
            "diagonal wave packing"},
        {"square_waves", "moore8",
            "###################\n"
            "#.......#.......#..\n"
            "..#####...#####...#\n"
            "###...#####...#####\n"
            "....#.......#......\n"
            "###################\n"
            "...................\n"
            "###################\n"
            "#...#...#...#...#..\n"
            "..#...#...#...#...#\n"
            "###################\n"
            "...................\n"
            "###################\n"
            "#.......#.......#..\n"
            "..#####...#####...#\n"
            "###...#####...#####\n"
            "....#.......#......\n"
            "###################\n",
            "########\n"
            "#.......\n"
            "..#####.\n"
            "###...##\n"
            "....#...\n"
            "########\n"
            "........\n"
            "########\n"
            "#...#...\n"
            "..#...#.\n"
            "########\n"
            "........\n",
            "square waves, orders 1 and 2"},
        {"moore_pattern", "moore8",
            "###..#.#..###.#.#...#.#\n"
            "#..###.#.#...#.#.###..#\n"
            "#.#...#.#.###..#.#..###\n"
            ".#.###..#.#..###.#.#...\n"
            ".#.#..###.#.#...#.#.###\n"
            "##.#.#...#.#.###..#.#..\n"
            "..#.#.###..#.#..###.#.#\n"
            "##..#.#..###.#.#...#.#.\n"
            "..###.#.#...#.#.###..#.\n"
            ".#...#.#.###..#.#..###.\n"
            "#.###..#.#..###.#.#...#\n"
            "#.#..###.#.#...#.#.###.\n"
            "#.#.#...#.#.###..#.#..#\n"
            ".#.#.###..#.#..###.#.#.\n"
            "#..#.#..###.#.#...#.#.#\n"
            ".###.#.#...#.#.###..#.#\n"
            "#...#.#.###..#.#..###.#\n"
            ".###..#.#..###.#.#...#.\n",
            nullptr,
            "interleaved wave and ring bands"},
        {"dcc_onions", "moore8",
            "...#....#....#....#...\n"
            "###.####.####.####.###\n"
            "..#.#..#.#..#.#..#.#..\n"
            "..#.#..#.#..#.#..#.#..\n"
            "###.####.####.####.###\n"
            "...#....#....#....#...\n"
            "###..###..###..###..##\n"
            "#..###..###..###..###.\n"
            "..#....#....#....#....\n"
            "##.####.####.####.####\n"
            ".#.#..#.#..#.#..#.#..#\n"
            ".#.#..#.#..#.#..#.#..#\n"
            "##.####.####.####.####\n"
            "..#....#....#....#....\n"
            "##..###..###..###..###\n"
            "..###..###..###..###..\n"
            ".#....#....#....#....#\n"
            "#.####.####.####.####.\n"
            "#.#..#.#..#.#..#.#..#.\n",
            nullptr,
            "onion columns with defect rows"},
        {"octets", "moore8",
            "#.###.#.#.###.#.#.###.#\n"
            "#.....#.#.....#.#.....#\n"
            "#######.#######.#######\n"
            ".......#.......#.......\n"
            ".#####.#.#####.#.#####.\n"
            ".#...#.#.#...#.#.#...#.\n"
            ".#.#.#.#.#.#.#.#.#.#.#.\n"
            "#.###.#.#.###.#.#.###.#\n"
            "#.....#.#.....#.#.....#\n"
            "#######.#######.#######\n"
            ".......#.......#.......\n"
            ".#####.#.#####.#.#####.\n"
            ".#...#.#.#...#.#.#...#.\n"
            ".#.#.#.#.#.#.#.#.#.#.#.\n"
            "#.###.#.#.###.#.#.###.#\n"
            "#.....#.#.....#.#.....#\n"
            "#######.#######.#######\n"
            ".......#.......#.......\n"
            ".#####.#.#####.#.#####.\n"
            ".#...#.#.#...#.#.#...#.\n",
            "#.###.#.\n"
            "#.....#.\n"
            "#######.\n"
            ".......#\n"
            ".#####.#\n"
            ".#...#.#\n"
            ".#.#.#.#\n",
            "eight-cell islands"},
        {"dozens", "moore8",
            "#.......#.......#.......#.......#\n"
            ".###############.###############.\n"
            ".#.............#.#.............#.\n"
            ".#.###########.#.#.###########.#.\n"
            "#.#.#.......#.#.#.#.#.......#.#.#\n"
            "#.#...#####...#.#.#...#####...#.#\n"
            "#.#####...#####.#.#####...#####.#\n"
            "#.......#.......#.......#.......#\n"
            ".###############.###############.\n"
            ".#.............#.#.............#.\n"
            ".#.###########.#.#.###########.#.\n"
            "#.#.#.......#.#.#.#.#.......#.#.#\n"
            "#.#...#####...#.#.#...#####...#.#\n"
            "#.#####...#####.#.#####...#####.#\n"
            "#.......#.......#.......#.......#\n"
            ".###############.###############.\n"
            ".#.............#.#.............#.\n"
            ".#.###########.#.#.###########.#.\n"
            "#.#.#.......#.#.#.#.#.......#.#.#\n"
            "#.#...#####...#.#.#...#####...#.#\n"
            "#.#####...#####.#.#####...#####.#\n",
            "#.......#.......\n"
            ".###############\n"
            ".#.............#\n"
            ".#.###########.#\n"
            "#.#.#.......#.#.\n"
            "#.#...#####...#.\n"
            "#.#####...#####.\n",
            "twelve-cell islands"},
        {"fig5b_perturbed", "moore8",
            "..###...###...###...\n"
            "###.#####.#####.####\n"
            "..#.#...#.#...#.#...\n"
            "###.#####.#####.####\n"
            "..###...###...###...\n"
            "##...###...###...###\n"
            ".#####.#####.#####.#\n"
            ".#...#.#...#.#...#.#\n"
            ".#####.#####.#####.#\n"
            "##...###...###...###\n"
            "..###...###...###...\n"
            "###.#####.#####.####\n"
            "..#.#...#.#...#.#...\n"
            "###.#####.#####.####\n"
            "..###...###...###...\n"
            "##...###...###...###\n"
            ".#####.#####.#####.#\n"
            ".#...#.#...#.#...#.#\n"
            ".#####.#####.#####.#\n"
            "##...###...###...###\n",
            "..###.\n"
            "###.##\n"
            "..#.#.\n"
            "###.##\n"
            "..###.\n"
            "##...#\n"
            ".#####\n"
            ".#...#\n"
            ".#####\n"
            "##...#\n",
            "densest known degree-4 perturbation of the stripe pattern"},
        {"densest_deg0", "moore8",
            "#.#.#.#.#.#\n"
            "...........\n"
            "#.#.#.#.#.#\n"
            "...........\n"
            "#.#.#.#.#.#\n"
            "...........\n"
            "#.#.#.#.#.#\n"
            "...........\n"
            "#.#.#.#.#.#\n"
            "...........\n"
            "#.#.#.#.#.#\n",
            "#.\n"
            "..\n",
            "isolated cells on the doubled lattice"},
        {"densest_deg1", "moore8",
            "##.##.##.##\n"
            "...........\n"
            "##.##.##.##\n"
            "...........\n"
            "##.##.##.##\n"
            "...........\n"
            "##.##.##.##\n"
            "...........\n"
            "##.##.##.##\n"
            "...........\n"
            "##.##.##.##\n",
            "##.\n"
            "...\n",
            "domino thirds"},
        {"densest_deg2", "moore8",
            "###########\n"
            "...........\n"
            "###########\n"
            "...........\n"
            "###########\n"
            "...........\n"
            "###########\n"
            "...........\n"
            "###########\n"
            "...........\n"
            "###########\n",
            "#\n"
            ".\n",
            "stripes"},
        {"densest_deg4", "moore8",
            "..###..###.\n"
            "##..###..##\n"
            ".###..###..\n"
            "#..###..###\n"
            "###..###..#\n"
            "..###..###.\n"
            "##..###..##\n"
            ".###..###..\n"
            "#..###..###\n"
            "###..###..#\n"
            "..###..###.\n",
            "..###\n"
            "##..#\n"
            ".###.\n"
            "#..##\n"
            "###..\n",
            "mod-5 diagonal stripes"},
        {"densest_deg4_alt", "moore8",
            "...........\n"
            "###########\n"
            ".#.#.#.#.#.\n"
            ".#.#.#.#.#.\n"
            "###########\n"
            "...........\n"
            "###########\n"
            ".#.#.#.#.#.\n"
            ".#.#.#.#.#.\n"
            "###########\n"
            "...........\n",
            "..\n"
            "##\n"
            ".#\n"
            ".#\n"
            "##\n",
            "mod-5 diagonal stripes (alternate)"},
        {"densest_deg5", "moore8",
            "#######.#..\n"
            "##.#..#.###\n"
            ".#.#######.\n"
            "#####.#..#.\n"
            ".#..#.#####\n"
            ".#######.#.\n"
            "###.#..#.##\n"
            "..#.#######\n"
            "######.#..#\n"
            "#.#..#.####\n"
            "#.#######.#\n",
            nullptr,
            "mod-13 cubic-residue complement"},
        {"densest_deg6", "moore8",
            "##.####.##\n"
            "####.####.\n"
            "#.####.###\n"
            "###.####.#\n"
            ".####.####\n"
            "##.####.##\n"
            "####.####.\n"
            "#.####.###\n"
            "###.####.#\n",
            "##.##\n"
            "####.\n"
            "#.###\n"
            "###.#\n"
            ".####\n",
            "mod-5 lattice complement"},
        {"densest_deg7", "moore8",
            "#########\n"
            "#.##.##.#\n"
            "#########\n"
            "#########\n"
            "#.##.##.#\n"
            "#########\n"
            "#########\n"
            "#.##.##.#\n"
            "#########\n",
            "###\n"
            "#.#\n"
            "###\n",
            "mod-3 lattice complement"},
        {"densest_deg8", "moore8",
            "#########\n"
            "#########\n"
            "#########\n"
            "#########\n"
            "#########\n"
            "#########\n"
            "#########\n"
            "#########\n"
            "#########\n",
            "#\n",
            "full lattice"},
        {"densest_vn4_deg0", "vn4",
            "#.#.#.#.#\n"
            ".#.#.#.#.\n"
            "#.#.#.#.#\n"
            ".#.#.#.#.\n"
            "#.#.#.#.#\n"
            ".#.#.#.#.\n"
            "#.#.#.#.#\n"
            ".#.#.#.#.\n"
            "#.#.#.#.#\n",
            "#.\n"
            ".#\n",
            "checkerboard"},
        {"densest_vn4_deg1_wire", "vn4",
            "#.##..##..#\n"
            ".#..##..##.\n"
            "#.##..##..#\n"
            ".#..##..##.\n"
            "#.##..##..#\n"
            ".#..##..##.\n"
            "#.##..##..#\n"
            ".#..##..##.\n"
            "#.##..##..#\n",
            "#.##..##..\n"
            ".#..##..##\n",
            "domino wire rows (alternate)"},
        {"densest_vn4_deg2", "vn4",
            ".##.##.##\n"
            "##.##.##.\n"
            "#.##.##.#\n"
            ".##.##.##\n"
            "##.##.##.\n"
            "#.##.##.#\n"
            ".##.##.##\n"
            "##.##.##.\n"
            "#.##.##.#\n",
            ".##\n"
            "##.\n"
            "#.#\n",
            "mod-3 diagonal complement"},
        {"densest_vn4_deg3", "vn4",
            "#.####.##\n"
            "###.####.\n"
            ".####.###\n"
            "##.####.#\n"
            "####.####\n"
            "#.####.##\n"
            "###.####.\n"
            ".####.###\n"
            "##.####.#\n",
            "#.###\n"
            "###.#\n"
            ".####\n"
            "##.##\n"
            "####.\n",
            "mod-5 diagonal complement"},
        {"densest_vn4_deg4", "vn4",
            "#########\n"
            "#########\n"
            "#########\n"
            "#########\n"
            "#########\n"
            "#########\n"
            "#########\n"
            "#########\n"
            "#########\n",
            "#\n",
            "full lattice"},
        {"densest_tri6_deg0", "tri6",
            nullptr,
            "..#\n"
            ".#.\n"
            "#..\n",
            "triangular sublattice of index 3"},
        {"densest_tri6_deg1", "tri6",
            nullptr,
            "...##\n"
            ".##..\n"
            "#...#\n"
            "..##.\n"
            "##...\n",
            "domino tiling of index 5"},
        {"densest_tri6_deg2", "tri6",
            nullptr,
            "#\n"
            ".\n",
            "alternate rows"},
        {"densest_tri6_deg2_alt", "tri6",
            nullptr,
            "###...##....\n"
            "...###..####\n",
            "alternate rows, long-period shuffle"},
        {"densest_tri6_deg3", "tri6",
            nullptr,
            "##.\n"
            "#.#\n"
            ".##\n",
            "index-3 sublattice complement"},
        {"densest_tri6_deg4", "tri6",
            nullptr,
            "##\n"
            "#.\n",
            "index-4 sublattice complement"},
        {"densest_tri6_deg4_alt", "tri6",
            nullptr,
            "##\n"
            "#.\n"
            "##\n"
            ".#\n",
            "index-4 complement, shifted rows"},
        {"densest_tri6_deg5", "tri6",
            nullptr,
            "##.####\n"
            "#####.#\n"
            "#.#####\n"
            "####.##\n"
            ".######\n"
            "###.###\n"
            "######.\n",
            "index-7 sublattice complement"},
        {"densest_tri6_deg6", "tri6",
            nullptr,
            "#\n",
            "full lattice"},
    };
    return entries;
}

// Signal-carrying wire loop; one full cycle advances the signal one rail period.
const char* wire_torus_text() {
    return
        ".##..##..##..##..##..##..##.\n"
        ".##..##..##..##..##..##..##.\n"
        "............................\n"
        "############################\n"
        "..#.....#.......#.....#.....\n"
        "...###....###....###....###.\n"
        ".#.......#.....#.......#....\n"
        "############################\n"
        "............................\n";
}

}  // namespace stillife
