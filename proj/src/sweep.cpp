#include "cycinv/sweep.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cycinv/oracle.hpp"

namespace cycinv {

std::vector<SweepRow> run_sweep(long long p_max, int jobs, bool use_oracle) {
    if (p_max < 2) return {};
    if (jobs < 1) throw std::invalid_argument("run_sweep: jobs must be positive");
    std::vector<std::pair<long long, long long>> tasks;
    for (long long p = 2; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        for (long long b = 1; b < p; ++b)
            if (b <= mod_inverse(b, p)) tasks.push_back({p, b});
    }
    std::vector<SweepRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex err_mutex;

    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size() || failed.load()) return;
            auto [p, b] = tasks[i];
            try {
                Classification cls = classify(p, b);
                if (use_oracle) {
                    InvariantSet ref = brute_semigroup(p, b);
                    if (ref.points != cls.inv.points)
                        throw TheoremViolation("sweep: sieve disagrees with staircase generators");
                }
                SweepRow& row = rows[i];
                row.p = p;
                row.b = cls.action.b;
                row.b_inv = cls.action.b_inv;
                row.product = cls.product;
                row.k = cls.k;
                row.n_invariants = (long long)cls.inv.size();
                row.n_slopes = (long long)cls.slope_set.size();
                row.q = cls.div.q;
                row.r = cls.div.r;
                row.s = cls.div.s;
                row.t = cls.div.t;
                row.label = to_string(cls.kind);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!failed.exchange(true)) first_error = e.what();
                return;
            }
        }
    };

    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) throw TheoremViolation("run_sweep: " + first_error);
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "p,b,b_inv,product,k,n_invariants,n_slopes,q,r,s,t,label\n";
    for (const auto& r : rows)
        os << r.p << ',' << r.b << ',' << r.b_inv << ',' << r.product << ',' << r.k << ','
           << r.n_invariants << ',' << r.n_slopes << ',' << r.q << ',' << r.r << ',' << r.s << ','
           << r.t << ',' << r.label << '\n';
    return os.str();
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
        j.push_back({{"p", r.p},
                     {"b", r.b},
                     {"b_inv", r.b_inv},
                     {"product", r.product},
                     {"k", r.k},
                     {"n_invariants", r.n_invariants},
                     {"n_slopes", r.n_slopes},
                     {"q", r.q},
                     {"r", r.r},
                     {"s", r.s},
                     {"t", r.t},
                     {"label", r.label}});
    return j.dump(2);
}

} // namespace cycinv
