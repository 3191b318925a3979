#pragma once

#include <optional>
#include <string>
#include <vector>

namespace randgrp {

// A letter is a signed 1-based generator index: +i stands for a_i, -i for
// its inverse. Words are stored freely reduced; graphical equality is
// sequence equality.
class Word {
public:
    Word() = default;
    Word(std::vector<int> letters, int rank);

    static Word identity(int rank) { return Word({}, rank); }

    // Free reduction of an arbitrary letter sequence.
    static Word reduce(const std::vector<int>& raw, int rank);

    const std::vector<int>& letters() const { return letters_; }
    int rank() const { return rank_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int letter(int i) const { return letters_[static_cast<std::size_t>(i)]; }

    Word inverse() const;
    Word concat(const Word& other) const;     // freely reduced product
    Word pow(int n) const;
    bool is_cyclically_reduced() const;

    bool operator==(const Word& other) const {
        return rank_ == other.rank_ && letters_ == other.letters_;
    }
    bool operator!=(const Word& other) const { return !(*this == other); }
    bool operator<(const Word& other) const;

    std::string str() const;                          // canonical text form
    static Word parse(const std::string& text, int rank);

private:
    std::vector<int> letters_;
    int rank_ = 2;
};

Word operator*(const Word& a, const Word& b);

// Conjugation decomposition w = wing * core * wing^-1, graphically, with a
// cyclically reduced core. |core| is the free translation length of w.
struct ConjDecomposition {
    Word wing;
    Word core;
    Word original;

    int translation_length() const { return core.size(); }
};

ConjDecomposition cyclic_reduce(const Word& w);

bool commute_free(const Word& g, const Word& h);

// Diameter (edge count) of the intersection of the two axes in the Cayley
// tree of F_k. Commuting inputs share an axis and report infinite overlap.
struct AxisOverlap {
    bool infinite = false;
    long long diameter = 0;
};

AxisOverlap axis_overlap_diameter(const Word& g, const Word& h);

// True iff w contains g^{n0} or g^{-n0} as a contiguous factor.
bool contains_power_subword(const Word& w, const Word& g, int n0);

enum class Lemma32Result { Verified, HypothesisFailed, Violation };

// Checks one instance of the commutation criterion: with n0 > 10,
// r, s > 110*n0, neither p nor q containing g^{+-n0} or h^{+-n0}, and
// p G^r q^-1 H^-s = 1 in F_k, the elements p G p^-1 and H must commute.
Lemma32Result check_lemma32_instance(const Word& p, const Word& q,
                                     const Word& G, const Word& H,
                                     long long n0, long long r, long long s);

} // namespace randgrp
