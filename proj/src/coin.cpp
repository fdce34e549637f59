#include "qwalk/coin.hpp"

#include <cmath>
#include <numbers>

namespace qwalk {

CoinOperator rotation_coin(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    CoinOperator b(2, 2);
    b << c, s, s, -c;
    return b;
}

CoinOperator grover_coin() {
    CoinOperator g = CoinOperator::Constant(4, 4, 0.5);
    g.diagonal().setConstant(-0.5);
    return g;
}

CoinOperator hadamard_coin() { return rotation_coin(std::numbers::pi / 4); }

CoinOperator pauli_x() {
    CoinOperator m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

CoinOperator pauli_y() {
    CoinOperator m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

CoinOperator pauli_z() {
    CoinOperator m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

}  // namespace qwalk
