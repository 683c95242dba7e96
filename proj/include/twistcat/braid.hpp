#pragma once

// Braid words (finite and affine flavors), the twist-functor action on
// twisted complexes, the induced reflection action on K-classes, and
// desk-scale triviality experiments.

#include "twistcat/lattice.hpp"
#include "twistcat/twisted.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace twistcat {

enum class BraidFlavor { Finite, Affine };

struct BraidLetter {
    int index;
    int exponent;  // +1 or -1
    bool operator==(const BraidLetter& o) const { return index == o.index && exponent == o.exponent; }
};

struct BraidWord {
    BraidFlavor flavor = BraidFlavor::Affine;
    int n = 2;
    std::vector<BraidLetter> letters;

    bool operator==(const BraidWord& o) const {
        return flavor == o.flavor && n == o.n && letters == o.letters;
    }
    int lo_index() const { return flavor == BraidFlavor::Affine ? 0 : 1; }
    void validate() const;

    // "s0 s1 S2": lowercase positive, uppercase inverse
    static BraidWord parse(const std::string& text, BraidFlavor flavor, int n);
    std::string to_string() const;
};

BraidWord free_reduce(const BraidWord& w);
BraidWord inverse(const BraidWord& w);

// Twist functor T_i: cone of the evaluation hom(L_i, X) (x) L_i -> X,
// minimized.  untwist is the inverse (dual cone, shifted back).
TwistedComplex twist(int i, const TwistedComplex& x);
TwistedComplex untwist(int i, const TwistedComplex& x);

// Left-to-right word action: the rightmost letter acts first, so that
// rho(ab) = rho(a) . rho(b).
TwistedComplex apply_word(const BraidWord& w, const TwistedComplex& x);

// Reflection action on K-classes ([T_E F] = [F] - chi([E],[F]) [E]); both
// signs of a letter act by the same involution.
LatticeVector k_class_action(const BraidWord& w, const LatticeVector& v);

bool acts_trivially_on_generators(const BraidWord& w, const Field& f);

// All freely reduced words of length <= len, lexicographic enumeration.
std::vector<BraidWord> reduced_words_up_to(BraidFlavor flavor, int n, int len);

// Word problem by bounded rewriting search: relations (braid moves for
// cyclically adjacent indices, commutation at cyclic distance >= 2), free
// insertion/cancellation, words capped at max_len.  A "true" answer is a
// certificate; "false" only means no derivation was found within the cap.
bool braid_trivial_within(const BraidWord& w, int max_len, size_t max_states = 2000000);

struct BallEntry {
    BraidWord word;
    bool object_trivial;   // fixes every generator object with identity K-action
    bool relation_trivial; // reduced to the empty word by the bounded search
};

struct FaithfulnessReport {
    int n;
    int radius;
    size_t words_tested;
    std::vector<BallEntry> trivial_words;  // words acting trivially on all generators
};

FaithfulnessReport faithfulness_ball(int n, int radius, const Field& f, int rewrite_cap = 0);

}  // namespace twistcat
