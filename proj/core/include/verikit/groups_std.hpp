#pragma once

#include "verikit/perm_group.hpp"

namespace verikit::groups {

PermGroup cyclic(unsigned n);
PermGroup symmetric(unsigned n);
PermGroup alternating(unsigned n);
PermGroup dihedral(unsigned p);       // degree p, order 2p (p >= 3)
PermGroup agl1(unsigned p);           // AGL_1(p) on p points
PermGroup psl32();                    // PSL_3(2) on the 7 points of P^2(F_2)
PermGroup psl33();                    // PSL_3(3) on the 13 points of P^2(F_3)
PermGroup pgl2(unsigned q);           // PGL_2(q) on q+1 points (q in {5,7,9})
PermGroup pgammal29();                // PGammaL_2(9) on 10 points
PermGroup mathieu11();                // M_11 on 11 points

// U wr V acting on m*d points; cell j is {j*m, ..., j*m + m - 1}.
PermGroup wreath_product(const PermGroup& u, const PermGroup& v);
BlockSystem wreath_blocks(unsigned m, unsigned d);

// u acting on cell `cell` of the standard wreath layout, trivial elsewhere.
Permutation embed_in_cell(const Permutation& u, unsigned cell, unsigned m,
                          unsigned d);
// v permuting the d cells, identically within each cell.
Permutation embed_cells_action(const Permutation& v, unsigned m, unsigned d);

}  // namespace verikit::groups
