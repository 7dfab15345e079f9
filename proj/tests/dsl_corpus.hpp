#pragma once

#include <string>
#include <vector>

namespace testing {

/// Round-trip corpus: every entry parses and evaluates.
inline const std::vector<std::string> kCorpus{
    "q",
    "1",
    "-3",
    "q^2",
    "1 - q",
    "1 - q + q^2",
    "1 + 2*q - 3*q^3",
    "(1 - q)^5",
    "(1 + q)^-2",
    "q^-1",
    "inv(1 - q)",
    "inv(q)",
    "inv(theta6)",
    "theta6",
    "theta6()",
    "theta6 * inv(theta6)",
    "poch(1,1)",
    "poch(1,1)^3",
    "inv(poch(1,1)^3)",
    "poch(2,2) * poch(1,2)^2",
    "poch(1,5) * poch(4,5)",
    "A(0)",
    "A(1)",
    "A(2) * C(1)",
    "C(3)",
    "B(1, 2)",
    "B(0, 1) - A(1)",
    "D(2, 0)",
    "D(1, 1) + D(0, 2)",
    "Agen(1, 3, 3)",
    "Agen(2, 5, 1) * q",
    "R14",
    "R23",
    "F5",
    "inv(R14 * F5)",
    "inv(R23() * F5())",
    "shift(A(1), -1)",
    "shift(q, 3)",
    "shift(shift(theta6, 2), -2)",
    "2 * (q + 1) * (q - 1)",
    "q * q * q",
    "((q))",
    "-1 * q",
    "q - -2",
    "1 - (1 - q)",
    "3^2",
    "(q^2)^3",
    "inv(1 - q - q^2)",
    "A(1) * A(1) - 2 * A(2)",
    "inv(poch(1,1)) - inv(poch(1,1))",
};

}  // namespace testing
