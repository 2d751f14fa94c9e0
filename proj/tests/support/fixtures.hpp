#pragma once

// Shared diagram fixtures. Crossing codes use 1-based input labels; expected
// arc ids in tests are the dense 0-based ranks of those labels.

namespace fixtures {

// Right-handed trefoil, all three crossings +1.
inline constexpr const char* trefoil_pd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

// Its mirror image, all three crossings -1.
inline constexpr const char* trefoil_mirror_pd =
    "X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)";

// Alternating figure-eight; signs -,-,+,+ under the stored orientation.
inline constexpr const char* figure_eight_pd =
    "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

// Positive Hopf link. Components: arcs {0,2} and {1,3}; lk = +1.
inline constexpr const char* hopf_pd = "X(4,1,3,2) X(2,3,1,4)";

// (2,4) torus link, all +1, lk = 2.
inline constexpr const char* l4a1_pd =
    "X(6,1,7,2) X(8,3,5,4) X(2,5,3,6) X(4,7,1,8)";

// Granny knot: positive trefoil stacked on a positive trefoil. Not a prime
// diagram; the balanced cut runs through dense arcs {0,6}, three crossings
// on each side.
inline constexpr const char* granny_pd =
    "X(7,10,8,11) X(9,12,10,1) X(11,8,12,9) "
    "X(1,4,2,5) X(3,6,4,7) X(5,2,6,3)";

// Square knot: positive trefoil stacked on the mirror trefoil. Same cut as
// the granny, but the diagram is not positive.
inline constexpr const char* square_pd =
    "X(7,10,8,11) X(9,12,10,1) X(11,8,12,9) "
    "X(4,2,5,1) X(6,4,7,3) X(2,6,3,5)";

// Positive trefoil with an extra positive kink; the kink splits off through
// dense arcs {0,2} with one crossing on its side.
inline constexpr const char* trefoil_kink_pd =
    "X(1,2,2,3) X(3,6,4,7) X(5,8,6,1) X(7,4,8,5)";

// Disjoint union of two positive trefoils (disconnected diagram).
inline constexpr const char* split_trefoils_pd =
    "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) "
    "X(7,10,8,11) X(9,12,10,7) X(11,8,12,9)";

// Two-crossing diagram of the 2-component unlink (planar: F = 4).
inline constexpr const char* flat_unlink_pd = "X(1,4,2,3) X(2,4,1,3)";

// Same arc census but the toroidal pairing; must be rejected.
inline constexpr const char* nonplanar_pd = "X(1,4,2,3) X(2,3,1,4)";

// One positive kink: the unknot with writhe +1.
inline constexpr const char* positive_kink_pd = "X(1,2,2,1)";

// One negative kink: the unknot with writhe -1.
inline constexpr const char* negative_kink_pd = "X(1,1,2,2)";

// Signed code of the positive trefoil.
inline constexpr const char* trefoil_gauss = "O1+U2+O3+U1+O2+U3+";

// Nested double kink: realizable, non-prime (cut arcs {0,2}).
inline constexpr const char* double_kink_gauss = "O1+U2+O2+U1+";

// Interleaved chords: not realizable on the sphere.
inline constexpr const char* virtual_gauss = "O1+O2+U1+U2+";

// Braid words (closures): sigma_1^2 = Hopf, sigma_1^3 = trefoil,
// sigma_1 sigma_1^{-1} = 2-unlink with one clasp.
inline constexpr const char* hopf_braid = "BR(2; 1 1)";
inline constexpr const char* trefoil_braid = "BR(2; 1 1 1)";
inline constexpr const char* conflict_braid = "BR(2; 1 -1)";

}  // namespace fixtures
