#pragma once

#include "ccloops/table.hpp"

// Small groups used as test inputs and reference cases.
namespace ccl::corpus {

GroupTable cyclic(int n);
// Dihedral group of order 2n (n >= 1), generated by a rotation and a
// reflection. dihedral(2) is the Klein four group, dihedral(3) is S3.
GroupTable dihedral(int n);
GroupTable quaternion8();
GroupTable alternating4();
// Z_2^k.
GroupTable elementary_abelian2(int k);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

}  // namespace ccl::corpus
