// Braid words and the symplectic Burau representation at t = -1.
#pragma once

#include "ht/exact_linalg.hpp"
#include "ht/marked_disk.hpp"
#include "ht/sp_form.hpp"

#include <string>
#include <vector>

namespace ht {

struct BraidLetter {
    int gen = 1;  // sigma_gen, 1 <= gen < strands
    int exp = 1;  // nonzero
    bool operator==(const BraidLetter&) const = default;
};

class BraidWord {
public:
    explicit BraidWord(int strands = 3);
    BraidWord(int strands, std::vector<BraidLetter> letters);
    /// Parses "s1 s2^-1 s1" (also accepts "s1^2"); the empty string is the
    /// identity.
    static BraidWord parse(const std::string& text, int strands);

    int strands() const { return strands_; }
    const std::vector<BraidLetter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }

    BraidWord inverse() const;
    BraidWord power(int k) const;
    BraidWord operator*(const BraidWord& o) const;
    BraidWord& operator*=(const BraidWord& o);
    bool operator==(const BraidWord&) const = default;

    long exponent_sum() const;
    std::string to_string() const;

private:
    int strands_;
    std::vector<BraidLetter> letters_;
};

/// sigma_i -> tau_{x_i} on H_1 of the hyperelliptic double cover, in the
/// chain basis x_1..x_{2g} with the chain form. Needs an odd strand count.
IntMatrix burau_symplectic(const BraidWord& w);

/// Unreduced Burau at t = -1: sigma_i -> I + block [[2, -1], [1, 0]].
IntMatrix unreduced_burau_minus1(const BraidWord& w);

/// Twist about the chord c_{ij}, i < j:
/// (s_{j-1}^-1 ... s_{i+1}^-1) s_i^2 (s_{i+1} ... s_{j-1}).
BraidWord pure_twist_word(int n, int i, int j);

/// Twist about the convex curve c_A as a product of chord twists. With the
/// points of A listed counterclockwise as i_1, ..., i_m the word is
/// (T_{i1 i2} ... T_{i1 im}) ... (T_{i(m-1) im}).
BraidWord curve_twist_word(const ConvexCurve& c);

/// Homology class (up to sign) of either lift of an even convex curve:
/// the image of its twist is tau_v^2 and v spans the image of (M - I)/2.
/// Throws std::invalid_argument for odd curves and std::logic_error if the
/// image is not of that shape.
LaxVector lift_class(const ConvexCurve& a);

/// |pair(v_a, v_b)| for even convex curves.
Int alg_pairing(const ConvexCurve& a, const ConvexCurve& b);

}  // namespace ht
