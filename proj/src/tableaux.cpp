#include "taquin/tableaux.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace taquin {

void for_each_syt(const Partition& shape, const std::function<void(const SytRows&)>& visit,
                  int max_cells) {
    const int n = shape.sum();
    if (n > max_cells)
        throw GuardError("tableau enumeration guarded to " + std::to_string(max_cells) + " cells");
    const int k = shape.rows();
    SytRows rows(k);
    std::vector<int> filled(k, 0);
    std::function<void(int)> place = [&](int value) {
        if (value > n) {
            visit(rows);
            return;
        }
        for (int i = 0; i < k; ++i) {
            if (filled[i] == shape.parts[i]) continue;
            if (i > 0 && filled[i - 1] <= filled[i]) continue;
            rows[i].push_back(value);
            ++filled[i];
            place(value + 1);
            --filled[i];
            rows[i].pop_back();
        }
    };
    place(1);
}

BigInt syt_count_bruteforce(const Partition& shape, int max_cells) {
    BigInt count = 0;
    for_each_syt(shape, [&](const SytRows&) { ++count; }, max_cells);
    return count;
}

std::vector<int> young_hooks(const Partition& shape) {
    std::vector<int> hooks;
    for (int i = 1; i <= shape.rows(); ++i)
        for (int j = 1; j <= shape.parts[i - 1]; ++j) {
            int arm = shape.parts[i - 1] - j;
            int leg = 0;
            for (int r = i + 1; r <= shape.rows(); ++r)
                if (shape.parts[r - 1] >= j) ++leg;
            hooks.push_back(arm + leg + 1);
        }
    return hooks;
}

BigInt syt_count_hook(const Partition& shape) {
    BigInt denom = 1;
    for (int h : young_hooks(shape)) denom *= h;
    BigInt num = factorial(shape.sum());
    if (num % denom != 0) throw std::runtime_error("hook product does not divide n!");
    return num / denom;
}

std::vector<int> shifted_hooks(const Partition& shape) {
    if (!shape.is_strict())
        throw std::invalid_argument("shifted hooks require a strictly decreasing partition");
    const int k = shape.rows();
    std::vector<int> hooks;
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= i + shape.parts[i - 1] - 1; ++j) {
            int arm = (i + shape.parts[i - 1] - 1) - j;
            int leg = 0;
            for (int r = i + 1; r <= k; ++r)
                if (r <= j && j <= r + shape.parts[r - 1] - 1) ++leg;
            // Column j ends on the diagonal cell (j,j) exactly when row j
            // exists; the hook then absorbs all of row j+1.
            int extension = (j <= k) ? (j + 1 <= k ? shape.parts[j] : 0) : 0;
            hooks.push_back(arm + leg + 1 + extension);
        }
    return hooks;
}

BigInt shifted_count_hook(const Partition& shape) {
    BigInt denom = 1;
    for (int h : shifted_hooks(shape)) denom *= h;
    BigInt num = factorial(shape.sum());
    if (num % denom != 0) throw std::runtime_error("shifted hook product does not divide n!");
    return num / denom;
}

BigInt inset_count(int k, const Partition& shape) {
    if (k < 2) throw std::invalid_argument("inset requires k >= 2");
    if (shape.rows() != k)
        throw std::invalid_argument("inset requires the shape to have exactly k parts");
    const int n = shape.sum();
    BigInt denom = 1;
    for (int h : young_hooks(shape)) denom *= h;
    for (int i = 1; i <= k; ++i) denom *= (n - shape.parts[i - 1] + i);
    BigInt num = factorial(n + k);
    if (num % denom != 0)
        throw std::runtime_error("inset hook product does not divide (n+k)!");
    return num / denom;
}

std::vector<BigInt> refined_counts(int k, const Partition& shape, int max_cells) {
    const int n = shape.sum();
    if (n + k > max_cells)
        throw GuardError("refined census guarded to n+k <= " + std::to_string(max_cells));
    const Poset p = inset(k, shape);

    const int second_row_box = *p.element_at(2, 0);
    std::vector<int> first_row_extras;
    for (int c = 2 - k; c <= 0; ++c) first_row_extras.push_back(*p.element_at(1, c));

    std::vector<BigInt> counts(shape.parts[0] + 1, 0);
    for_each_dual_linear_extension(p, [&](const Labeling& iota) {
        for (std::size_t idx = 0; idx < first_row_extras.size(); ++idx)
            if (iota[first_row_extras[idx]] != static_cast<int>(idx) + 1)
                throw std::runtime_error("first-row prefix of an inset filling is not 1..k-1");
        const int i = iota[second_row_box] - k;
        if (i < 0 || i > shape.parts[0])
            throw std::runtime_error("second-row leader outside k..k+lambda_1");
        ++counts[i];
        return true;
    });
    return counts;
}

BigRat expectation_closed_form(const Partition& shape) {
    if (shape.rows() < 2)
        throw std::invalid_argument("the second-row leader needs a shape with at least two rows");
    const int n = shape.sum();
    BigRat e = 1;
    for (int i = 1; i <= shape.rows(); ++i)
        e *= BigRat(n + i, n + i - shape.parts[i - 1]);
    return e;
}

BigRat expectation_bruteforce(const Partition& shape, int max_cells) {
    if (shape.rows() < 2)
        throw std::invalid_argument("the second-row leader needs a shape with at least two rows");
    BigInt total = 0, tableaux = 0;
    for_each_syt(shape, [&](const SytRows& rows) {
        total += rows[1][0];
        ++tableaux;
    }, max_cells);
    return BigRat(total, tableaux);
}

ExpectationReport expectation_report(const Partition& shape, bool with_refined) {
    ExpectationReport report;
    report.shape = shape;
    report.f_shape = syt_count_hook(shape);
    report.f_inset = inset_count(shape.rows(), shape);
    report.expectation = expectation_closed_form(shape);
    if (with_refined) report.refined = refined_counts(shape.rows(), shape);
    return report;
}

namespace {

std::string rat_str(const BigRat& r) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
    return out.str();
}

Partition hook_shape(int k) {
    std::vector<int> parts{k};
    parts.insert(parts.end(), k - 1, 1);
    return Partition(parts);
}

Partition rectangle_shape(int c, int k) { return Partition(std::vector<int>(k, c)); }

Partition staircase_shape(int k) {
    std::vector<int> parts(k);
    for (int i = 0; i < k; ++i) parts[i] = k - i;
    return Partition(parts);
}

}  // namespace

std::vector<FamilyCheck> family_checks() {
    std::vector<FamilyCheck> checks;

    for (int k = 2; k <= 8; ++k) {
        const BigRat got = expectation_closed_form(hook_shape(k));
        const BigRat want(3 * k - 1, k);
        FamilyCheck c;
        c.name = "hook shape k=" + std::to_string(k) + ": expectation 3 - 1/k";
        c.pass = (got == want);
        c.detail = rat_str(got) + (c.pass ? " == " : " != ") + rat_str(want);
        checks.push_back(std::move(c));
    }

    using boost::multiprecision::abs;
    using boost::multiprecision::pow;
    for (int c = 1; c <= 3; ++c) {
        const BigRat limit(pow(BigInt(c + 1), c), pow(BigInt(c), c));
        BigRat prev_gap = -1;
        bool exact_ok = true, monotone = true;
        for (int k = std::max(c, 2); k <= 8; ++k) {  // one row only when c = k = 1
            const BigRat got = expectation_closed_form(rectangle_shape(c, k));
            BigRat want = 1;
            for (int i = 1; i <= c; ++i) want *= BigRat(k * (c + 1) + 1 - i, k * c + 1 - i);
            if (got != want) exact_ok = false;
            const BigRat gap = abs(got - limit);
            if (prev_gap >= 0 && gap > prev_gap) monotone = false;
            prev_gap = gap;
        }
        FamilyCheck fc;
        fc.name = "rectangle c=" + std::to_string(c) + ": product form, trend to (1+1/c)^c";
        fc.pass = exact_ok && monotone;
        fc.detail = std::string(exact_ok ? "product form exact" : "product form mismatch") +
                    (monotone ? ", gap to limit non-increasing" : ", gap to limit increased");
        checks.push_back(std::move(fc));
    }

    {
        bool exact_ok = true, monotone = true;
        double prev_gap = -1.0;
        const double e = std::exp(1.0);
        for (int k = 2; k <= 6; ++k) {
            const int cells = k * (k + 1) / 2;
            const BigRat got = expectation_closed_form(staircase_shape(k));
            const BigRat want(double_factorial(cells + k) * double_factorial(cells - k - 1),
                              factorial(cells));
            if (got != want) exact_ok = false;
            if (k >= 3) {
                const double gap = std::abs(static_cast<double>(got) - e);
                if (prev_gap >= 0.0 && gap >= prev_gap) monotone = false;
                prev_gap = gap;
            }
        }
        FamilyCheck fc;
        fc.name = "staircase k=2..6: double-factorial form, trend to e";
        fc.pass = exact_ok && monotone;
        fc.detail = std::string(exact_ok ? "double-factorial form exact" : "closed form mismatch") +
                    (monotone ? ", |E - e| decreasing for k=3..6" : ", |E - e| not decreasing");
        checks.push_back(std::move(fc));
    }

    return checks;
}

}  // namespace taquin
