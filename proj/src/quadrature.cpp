#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace becrad::quad {

namespace {

// QUADPACK 15-point Kronrod extension of 7-point Gauss.
constexpr double XGK[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0,
};
constexpr double WGK[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278,
};
// Gauss weights pair with XGK[1], XGK[3], XGK[5] and the midpoint.
constexpr double WG[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694,
};

struct Panel {
    double a, b;
    Complex value;
    double error;
    std::size_t seq;  // insertion order, for deterministic heap tie-breaks
};

struct WorseError {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.seq > y.seq;
    }
};

Panel eval_panel(const std::function<Complex(double)>& f, double a, double b, std::size_t seq) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Complex k15 = WGK[7] * f(c);
    Complex g7 = WG[3] * f(c);
    for (int j = 0; j < 7; ++j) {
        Complex s = f(c - h * XGK[j]) + f(c + h * XGK[j]);
        k15 += WGK[j] * s;
        if (j == 1) g7 += WG[0] * s;
        if (j == 3) g7 += WG[1] * s;
        if (j == 5) g7 += WG[2] * s;
    }
    k15 *= h;
    g7 *= h;
    return Panel{a, b, k15, std::abs(k15 - g7), seq};
}

}  // namespace

Result gk15(const std::function<Complex(double)>& f, double a, double b) {
    Panel p = eval_panel(f, a, b, 0);
    return Result{p.value, p.error, 1};
}

Result adaptive(const std::function<Complex(double)>& f, double a, double b, double tol_abs,
                const std::function<double(double)>& rate, std::size_t max_panels) {
    require(b > a, Status::invalid_argument, "adaptive quadrature needs b > a");
    require(tol_abs > 0.0, Status::invalid_argument, "adaptive quadrature needs tol > 0");

    const double span = b - a;
    const double min_step = span * 1e-7;
    const double max_step = span * 0.25;

    std::priority_queue<Panel, std::vector<Panel>, WorseError> heap;
    std::size_t seq = 0;
    double err_sum = 0.0;

    double t = a;
    while (t < b) {
        double r = rate ? rate(t) : 0.0;
        double step = r > 0.0 ? M_PI / r : max_step;  // half an oscillation per seed panel
        step = std::clamp(step, min_step, max_step);
        double t2 = std::min(t + step, b);
        if (t2 <= t) break;  // double underflow near b
        Panel p = eval_panel(f, t, t2, seq++);
        err_sum += p.error;
        heap.push(p);
        t = t2;
        if (seq > max_panels)
            fail(Status::numerical_failure, "oscillatory quadrature: seed panel budget exhausted");
    }

    while (err_sum > tol_abs && heap.size() < max_panels) {
        Panel worst = heap.top();
        heap.pop();
        err_sum -= worst.error;
        double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {  // cannot split further
            err_sum += worst.error;
            heap.push(worst);
            break;
        }
        Panel l = eval_panel(f, worst.a, mid, seq++);
        Panel r = eval_panel(f, mid, worst.b, seq++);
        err_sum += l.error + r.error;
        heap.push(l);
        heap.push(r);
    }

    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    if (err_sum > tol_abs && panels.size() >= max_panels) {
        const Panel* worst = &panels.front();
        for (const Panel& p : panels)
            if (p.error > worst->error) worst = &p;
        std::ostringstream os;
        os << "oscillatory quadrature: panel budget " << max_panels
           << " exhausted, error sum " << err_sum << " > tol " << tol_abs << "; worst panel ["
           << worst->a << ", " << worst->b << "] error " << worst->error;
        fail(Status::numerical_failure, os.str());
    }

    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    Result out;
    out.panels = panels.size();
    for (const Panel& p : panels) {
        out.value += p.value;
        out.error += p.error;
    }
    return out;
}

Extrapolated neville_at_zero(const std::vector<double>& eps, const std::vector<Complex>& values,
                             int order) {
    require(eps.size() == values.size(), Status::invalid_argument,
            "extrapolation ladder: eps/value length mismatch");
    require(eps.size() >= 2, Status::invalid_argument, "extrapolation ladder needs >= 2 points");
    require(order >= 1, Status::invalid_argument, "extrapolation order must be >= 1");

    auto run = [&](int ord) -> Complex {
        int m = ord + 1;
        int n = static_cast<int>(eps.size());
        int start = n - m;
        std::vector<double> x(eps.begin() + start, eps.end());
        std::vector<Complex> p(values.begin() + start, values.end());
        for (int j = 1; j < m; ++j)
            for (int i = 0; i + j < m; ++i)
                p[i] = (x[i + j] * p[i] - x[i] * p[i + 1]) / (x[i + j] - x[i]);
        return p[0];
    };

    int max_order = static_cast<int>(eps.size()) - 1;
    int ord = std::min(order, max_order);
    Complex hi = run(ord);
    Complex lo = ord >= 1 ? run(ord - 1) : values.back();
    return Extrapolated{hi, std::abs(hi - lo)};
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    require(n >= 1, Status::invalid_argument, "gauss_legendre needs n >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            if (n == 1) p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            double pn = (n == 1) ? x : p1;
            pp = n * (x * pn - p0) / (x * x - 1.0);
            double dx = pn / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
}

}  // namespace becrad::quad
