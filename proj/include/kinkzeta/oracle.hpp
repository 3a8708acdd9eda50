#pragma once

#include <functional>
#include <vector>

#include "kinkzeta/resolvent.hpp"

namespace kinkzeta::oracle {

enum class Boundary { dirichlet, periodic };

// -d^2/dx^2 + u(x) on a uniform grid, second-order differences.
struct LatticeSpec {
    double x_min = 0, x_max = 1;
    int n = 2000;
    Boundary bc = Boundary::dirichlet;
    std::function<double(double)> u;

    double spacing() const;
    std::vector<double> nodes() const;
};

// lowest `count` eigenvalues, ascending; periodic lattices accept a Bloch phase theta
std::vector<double> eigenvalues(const LatticeSpec& spec, int count);
std::vector<double> eigenvalues(const LatticeSpec& spec, int count, double theta);
// number of eigenvalues below sigma
int count_below(const LatticeSpec& spec, double sigma, double theta = 0);

struct RelativeTrace {
    double value = 0;
    double tail = 0;  // largest |summand| among the top 1% of the spectrum
    bool truncation_warning = false;
};
RelativeTrace relative_heat_trace(const LatticeSpec& spec, const LatticeSpec& spec0, double t);
// eigenvalues computed once, traces at many t
std::vector<RelativeTrace> relative_heat_trace(const LatticeSpec& spec, const LatticeSpec& spec0,
                                               const std::vector<double>& ts);

// lowest `count` eigenvalues of the theta = 0 and theta = pi problems on one period, merged
std::vector<double> band_edges_lattice(const LatticeSpec& spec, int count);

// lattice for the potential of a resolvent case: one period, or the box [-20/b, 20/b] for kinks
LatticeSpec lattice_for(const resolvent::ResolventPolynomial& rp, int n);
LatticeSpec vacuum_lattice_for(const resolvent::ResolventPolynomial& rp, int n);

}  // namespace kinkzeta::oracle
