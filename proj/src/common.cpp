#include "taquin/common.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>

namespace taquin {

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    Permutation pi = identity_permutation(n);
    do {
        fn(pi);
    } while (std::next_permutation(pi.begin(), pi.end()));
}

void for_each_permutation_parallel(int n, int jobs,
                                   const std::function<void(int, const Permutation&)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for_each_permutation(n, [&](const Permutation& pi) { fn(0, pi); });
        return;
    }
    jobs = std::min(jobs, n);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([n, t, jobs, &fn, &failure, &failure_mutex] {
            try {
                // Worker t owns the blocks with first entry t+1, t+1+jobs, ...
                for (int first = t + 1; first <= n; first += jobs) {
                    Permutation pi(n);
                    pi[0] = first;
                    int next = 1;
                    for (int v = 1; v <= n; ++v)
                        if (v != first) pi[next++] = v;
                    do {
                        fn(t, pi);
                    } while (std::next_permutation(pi.begin() + 1, pi.end()));
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
}

std::string join_ints(const std::vector<int>& values, char sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << sep;
        out << values[i];
    }
    return out.str();
}

std::vector<int> parse_int_list(const std::string& text, char sep) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        if (item.empty()) throw std::invalid_argument("empty entry in integer list: '" + text + "'");
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

}  // namespace taquin
