#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace qwalk {

// Geometry of the walk Hilbert space: an internal (coin) factor of dimension
// 2 or 4 tensored with a square position lattice sized to the exact support
// of a `steps`-step walk, L = 2*steps + 1 per axis.  Lattice coordinates run
// over [-steps, steps]; there is no periodic wrap at the boundary because a
// walk of `steps` steps never reaches past it.
//
// Flat ordering is coin-major: index(c, x, y) = c*L^2 + (x+steps)*L + (y+steps),
// so operators acting on the coin alone are block operations with stride L^2.
struct HilbertSpec {
    int coin_dim = 2;
    int steps = 0;

    int extent() const { return 2 * steps + 1; }
    Eigen::Index site_count() const {
        const Eigen::Index l = extent();
        return l * l;
    }
    Eigen::Index dim() const { return coin_dim * site_count(); }

    bool in_lattice(int x, int y) const {
        return x >= -steps && x <= steps && y >= -steps && y <= steps;
    }

    // index of a lattice site within one coin block
    Eigen::Index site_index(int x, int y) const {
        check_coordinates(0, x, y);
        const Eigen::Index l = extent();
        return static_cast<Eigen::Index>(x + steps) * l + (y + steps);
    }

    Eigen::Index flat_index(int c, int x, int y) const {
        check_coordinates(c, x, y);
        const Eigen::Index l = extent();
        return static_cast<Eigen::Index>(c) * l * l +
               static_cast<Eigen::Index>(x + steps) * l + (y + steps);
    }

    struct Coordinate {
        int c, x, y;
    };

    Coordinate unflatten(Eigen::Index i) const {
        if (i < 0 || i >= dim()) throw std::out_of_range("HilbertSpec: flat index out of range");
        const Eigen::Index l = extent();
        Coordinate r;
        r.c = static_cast<int>(i / (l * l));
        const Eigen::Index rest = i % (l * l);
        r.x = static_cast<int>(rest / l) - steps;
        r.y = static_cast<int>(rest % l) - steps;
        return r;
    }

    bool operator==(const HilbertSpec& other) const = default;

private:
    void check_coordinates(int c, int x, int y) const {
        if (c < 0 || c >= coin_dim)
            throw std::out_of_range("HilbertSpec: coin label " + std::to_string(c) +
                                    " outside [0, " + std::to_string(coin_dim) + ")");
        if (!in_lattice(x, y))
            throw std::out_of_range("HilbertSpec: site (" + std::to_string(x) + ", " +
                                    std::to_string(y) + ") outside [-" + std::to_string(steps) +
                                    ", " + std::to_string(steps) + "]^2");
    }
};

}  // namespace qwalk
