#ifndef CRPQ_TESTS_FIXTURES_HPP
#define CRPQ_TESTS_FIXTURES_HPP

// Shared query fixtures used across unit and acceptance tests.

#include <string>

#include "crpq/query.hpp"

namespace crpq::testsupport {

// Ten-variable query with two high-degree bound hubs (B and F):
// Q(A,C,E,G,H) = r1(A,B) r2(B,C) r3(B,D) r4(E,D) r5(A,F) r6(F,G) r7(F,H)
//                r8(F,I) r9(I,J)
inline Crpq two_hub_query() {
    return parse_query("free: A C E G H\n"
                       "atom: A B a\n"
                       "atom: B C b\n"
                       "atom: B D c\n"
                       "atom: E D d\n"
                       "atom: A F e\n"
                       "atom: F G f\n"
                       "atom: F H g\n"
                       "atom: F I h\n"
                       "atom: I J i\n");
}

// Free-connex query Q(A,B,D) = r1(A,B) r2(B,C) r3(B,D) r4(A,E) r5(E,F)
inline Crpq free_connex_five_atom_query() {
    return parse_query("free: A B D\n"
                       "atom: A B a\n"
                       "atom: B C b\n"
                       "atom: B D c\n"
                       "atom: A E d\n"
                       "atom: E F e\n");
}

// Four-atom free-connex query with join tree rooted at r1:
// Q(X,Y) = r1(X,Y) r2(Y,Z) r3(Z,W) r4(X,U)
inline Crpq calibrated_four_atom_query() {
    return parse_query("free: X Y\n"
                       "atom: X Y a\n"
                       "atom: Y Z b\n"
                       "atom: Z W c\n"
                       "atom: X U d\n");
}

// k-star with bound center: Q(X1..Xk) = a1(X1,Y) ... ak(Xk,Y)
inline Crpq k_star_query(int k) {
    std::string text = "free:";
    for (int i = 1; i <= k; ++i) text += " X" + std::to_string(i);
    text += "\n";
    for (int i = 1; i <= k; ++i) {
        std::string label = std::string(1, static_cast<char>('a' + i - 1));
        text += "atom: X" + std::to_string(i) + " Y " + label + "\n";
    }
    return parse_query(text);
}

// 2-path with free endpoints: Q(X,Z) = a(X,Y) b(Y,Z)
inline Crpq two_path_query() {
    return parse_query("free: X Z\natom: X Y a\natom: Y Z b\n");
}

} // namespace crpq::testsupport

#endif
