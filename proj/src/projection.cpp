#include "ldg4/projection.hpp"

#include <vector>

#include "ldg4/circulant.hpp"
#include "ldg4/errors.hpp"

namespace ldg4 {

namespace {

double sign_pow(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// Right and left limits of w restricted to modes below k.
void lower_ends(const DGFunction& w, std::vector<double>& right, std::vector<double>& left) {
    const std::size_t n = w.num_cells();
    const auto k = static_cast<std::size_t>(w.degree());
    right.assign(n, 0.0);
    left.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double sr = 0.0;
        double sl = 0.0;
        double s = 1.0;
        for (std::size_t m = 0; m < k; ++m) {
            sr += w(j, m);
            sl += s * w(j, m);
            s = -s;
        }
        right[j] = sr;
        left[j] = sl;
    }
}

DGFunction lower_moments(const SampledField& f, int k) {
    if (k < 0 || f.max_mode < k) {
        throw InvalidArgument("projection: sampled field does not carry enough moments");
    }
    DGFunction w(f.mesh, k);
    for (std::size_t j = 0; j < w.num_cells(); ++j) {
        for (std::size_t m = 0; m < static_cast<std::size_t>(k); ++m) {
            w(j, m) = f.moment(j, m);
        }
    }
    return w;
}

std::vector<double> weighted_targets(const SampledField& f, double sigma, Closure closure) {
    const std::size_t n = f.mesh->num_cells();
    std::vector<double> t(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        t[i] = sigma * f.minus[i] + (1.0 - sigma) * f.plus[i];
    }
    if (closure == Closure::right_anchored) {
        t[n] = f.minus[n];
    } else if (closure == Closure::left_anchored) {
        t[0] = f.plus[0];
    }
    return t;
}

}  // namespace

Closure closure_for(Var v, BoundaryKind bc) {
    if (bc == BoundaryKind::periodic) {
        return Closure::periodic;
    }
    return (v == Var::u || v == Var::q) ? Closure::right_anchored : Closure::left_anchored;
}

void close_top_mode(DGFunction& w, double sigma, Closure closure, std::span<const double> targets) {
    const std::size_t n = w.num_cells();
    const int k = w.degree();
    const auto top = static_cast<std::size_t>(k);
    if (targets.size() != n + 1) {
        throw InvalidArgument("close_top_mode: need one target per interface");
    }
    const double tilde = 1.0 - sigma;
    const double off = sign_pow(k) * tilde;
    std::vector<double> right;
    std::vector<double> left;
    lower_ends(w, right, left);

    switch (closure) {
        case Closure::periodic: {
            std::vector<double> b(n);
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t jn = (j + 1 == n) ? 0 : j + 1;
                b[j] = targets[j + 1] - sigma * right[j] - tilde * left[jn];
            }
            const auto x = circulant_solve({sigma, k, n}, b);
            for (std::size_t j = 0; j < n; ++j) {
                w(j, top) = x[j];
            }
            return;
        }
        case Closure::right_anchored: {
            if (sigma == 0.0) {
                throw SingularSystem("right-anchored closure needs a nonzero weight");
            }
            w(n - 1, top) = targets[n] - right[n - 1];
            for (std::size_t j = n - 1; j-- > 0;) {
                const double b = targets[j + 1] - sigma * right[j] - tilde * left[j + 1];
                w(j, top) = (b - off * w(j + 1, top)) / sigma;
            }
            return;
        }
        case Closure::left_anchored: {
            if (tilde == 0.0) {
                throw SingularSystem("left-anchored closure needs a weight different from 1");
            }
            w(0, top) = sign_pow(k) * (targets[0] - left[0]);
            for (std::size_t j = 1; j < n; ++j) {
                const double b = targets[j] - sigma * right[j - 1] - tilde * left[j];
                w(j, top) = (b - sigma * w(j - 1, top)) / off;
            }
            return;
        }
    }
}

DGFunction ggr_project_periodic(const SampledField& f, double sigma, int k) {
    if (sigma == 0.5) {
        throw SingularSystem("periodic projection: weight 1/2 gives a singular system");
    }
    DGFunction w = lower_moments(f, k);
    close_top_mode(w, sigma, Closure::periodic, weighted_targets(f, sigma, Closure::periodic));
    return w;
}

DGFunction ggr_project_piecewise(const SampledField& f, double sigma, int k, Closure side) {
    if (sigma == 0.5) {
        throw InvalidWeight("piecewise projection: weight 1/2 is not allowed");
    }
    if (side == Closure::periodic) {
        throw InvalidArgument("piecewise projection needs a left or right anchor");
    }
    DGFunction w = lower_moments(f, k);
    close_top_mode(w, sigma, side, weighted_targets(f, sigma, side));
    return w;
}

DGFunction ggr_project(const SampledField& f, double sigma, int k, Closure closure) {
    return closure == Closure::periodic ? ggr_project_periodic(f, sigma, k)
                                        : ggr_project_piecewise(f, sigma, k, closure);
}

DGFunction local_project(const SampledField& f, double theta, int k) {
    if (theta == 0.5) {
        throw InvalidWeight("local projection: weight 1/2 is not allowed");
    }
    const double tilde = 1.0 - theta;
    const double coef = theta + tilde * sign_pow(k);
    DGFunction w = lower_moments(f, k);
    std::vector<double> right;
    std::vector<double> left;
    lower_ends(w, right, left);
    const auto top = static_cast<std::size_t>(k);
    for (std::size_t j = 0; j < w.num_cells(); ++j) {
        const double rhs = theta * f.minus[j + 1] + tilde * f.plus[j] - theta * right[j] - tilde * left[j];
        w(j, top) = rhs / coef;
    }
    return w;
}

DGFunction l2_project(const SampledField& f, int k) {
    DGFunction w = lower_moments(f, k);
    for (std::size_t j = 0; j < w.num_cells(); ++j) {
        w(j, static_cast<std::size_t>(k)) = f.moment(j, static_cast<std::size_t>(k));
    }
    return w;
}

SampledField sample(std::shared_ptr<const Mesh1D> mesh, const std::function<double(double)>& f, int k) {
    return SampledField::from_function(std::move(mesh), f, k, 2 * (k + 3));
}

}  // namespace ldg4
