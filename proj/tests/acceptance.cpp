// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "fixtures.hpp"
#include "oracles.hpp"

#include "sdc/search.hpp"
#include "sdc/tables.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace sdc;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

bool run(int id, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = limit_s <= 0 || s < limit_s;
    std::ostringstream line;
    line << "criterion " << id << ": " << (o.ok && in_time ? "PASS" : "FAIL") << " (" << o.detail;
    if (!in_time) line << "; exceeded " << limit_s << " s";
    line.precision(2);
    line << std::fixed << "; " << s << " s)";
    std::cout << line.str() << std::endl;
    return o.ok && in_time;
}

Element random_element(Ring r, std::mt19937_64& rng) {
    const auto all = Element::all(r);
    return all[rng() % all.size()];
}

QRSpec random_qr(int p, Ring r, std::mt19937_64& rng) {
    return {p, random_element(r, rng), random_element(r, rng), random_element(r, rng)};
}

oracle::Matrix dense_qr(const QRSpec& q) {
    return oracle::circulant(oracle::qr_first_row(q.p(), oracle::encode(q.a()), oracle::encode(q.b()), oracle::encode(q.c())));
}

// Specs whose entries are mostly zero, so that M M^T = 0 occurs often.
ConstructionSpec sparse_spec(int p, Ring r, std::mt19937_64& rng) {
    auto sparse = [&] { return rng() % 6 ? Element::zero(r) : random_element(r, rng); };
    std::array<QRSpec, 3> q{QRSpec::zero(r, p), QRSpec::zero(r, p), QRSpec::zero(r, p)};
    for (auto& x : q) x = QRSpec(p, sparse(), sparse(), sparse());
    std::array<RingVector, 3> a{RingVector(r, static_cast<std::size_t>(p)), RingVector(r, static_cast<std::size_t>(p)),
                                RingVector(r, static_cast<std::size_t>(p))};
    for (auto& row : a)
        for (std::size_t i = 0; i < row.size(); ++i) row.set(i, sparse());
    return {p, r, q, a};
}

std::string params(const Analysis& a) {
    std::ostringstream os;
    os << '[' << a.binary_length << ',' << a.binary_length / 2 << ',';
    if (a.weights.d) os << *a.weights.d; else os << "?";
    os << "] A12=" << a.weights.at(12) << " A14=" << a.weights.at(14);
    for (const auto& m : a.weights.families) {
        os << ' ' << m.family;
        if (m.gamma) os << " gamma=" << *m.gamma;
        if (m.beta) os << " beta=" << *m.beta;
    }
    return os.str();
}

struct Expected {
    std::size_t n;
    std::uint64_t a12;
    std::optional<std::uint64_t> a14;
    std::string family;
    std::optional<int> gamma;
    int beta;
};

Outcome check_code(const Code& code, const Expected& e) {
    const Analysis a = analyze(code, 14);
    const auto* m = a.weights.families.empty() ? nullptr : &a.weights.families.front();
    const bool ok = a.binary_length == e.n && a.type == CodeType::I && a.weights.d == 12 && a.weights.at(12) == e.a12 &&
                    (!e.a14 || a.weights.at(14) == *e.a14) && a.weights.families.size() == 1 && m->family == e.family &&
                    m->beta == e.beta && m->gamma == e.gamma && is_self_dual(code);
    return {ok, params(a)};
}

}  // namespace

int main() {
    TableBook book(fixture::data_dir());
    bool all = true;

    all &= run(1, 5, [] {
        std::mt19937_64 rng(1);
        int mismatches = 0, cases = 0;
        for (int p : {5, 13, 7, 11})
            for (Ring r : {Ring::F2, Ring::F2U})
                for (int t = 0; t < 100; ++t, ++cases) {
                    const QRSpec i = random_qr(p, r, rng), j = random_qr(p, r, rng);
                    const auto want = oracle::product(dense_qr(i), oracle::transpose(dense_qr(j)));
                    mismatches += dense_qr(qr_product(i, j)) != want;
                }
        return Outcome{mismatches == 0, std::to_string(cases) + " products, " + std::to_string(mismatches) + " mismatches"};
    });

    all &= run(2, 30, [] {
        std::mt19937_64 rng(2);
        int mismatches = 0, zero = 0, cases = 0;
        for (int p : {3, 5, 7, 11, 13})
            for (Ring r : {Ring::F2, Ring::F2U})
                for (int t = 0; t < 1000; ++t, ++cases) {
                    const auto s = t % 2 ? sparse_spec(p, r, rng) : random_spec(p, r, rng);
                    const auto m = oracle::construction_matrix(s);
                    const bool orth = oracle::is_zero(oracle::product(m, oracle::transpose(m)));
                    zero += orth;
                    mismatches += check_theorem_4_conditions(s) != orth;
                }
        return Outcome{mismatches == 0, std::to_string(cases) + " specs, " + std::to_string(zero) + " with M M^T = 0, " +
                                            std::to_string(mismatches) + " mismatches"};
    });

    all &= run(3, 10, [&] {
        const Code c = build(fixture::length60_spec());
        if (!is_self_dual(c)) return Outcome{false, "not self-dual over the ring"};
        return check_code(c, {60, 2555, std::nullopt, "W60,2", std::nullopt, 0});
    });

    all &= run(4, 30, [&] { return check_code(book.code("D1"), {64, 1536, 21120, "W64,1", std::nullopt, 14}); });
    all &= run(5, 60, [&] { return check_code(book.code("E1"), {66, 1026, 17662, "W66,3", std::nullopt, 21}); });
    all &= run(6, 60, [&] { return check_code(book.code("F1"), {68, 710, 13912, "W68,2", 2, 67}); });

    all &= run(7, 600, [&] {
        const std::vector<std::pair<int, int>> want{{3, 103}, {4, 124}, {5, 134}, {6, 149}, {6, 133},
                                                    {7, 145}, {8, 161}, {8, 153}, {9, 177}};
        int good = 0;
        std::string first_bad;
        for (std::size_t i = 0; i < want.size(); ++i) {
            const std::string id = "N" + std::to_string(i + 1);
            const Code& c = book.code(id);
            const Analysis a = analyze(c, 14);
            bool ok = a.weights.d == 12 && a.binary_length == 68;
            if (ok) {
                ok = false;
                for (const auto& m : a.weights.families)
                    ok |= m.family == "W68,2" && m.gamma == want[i].first && m.beta == want[i].second;
            }
            good += ok;
            if (!ok && first_bad.empty()) first_bad = "; first mismatch " + id + ": " + params(a);
        }
        return Outcome{good == 9, std::to_string(good) + "/9 steps match" + first_bad};
    });

    all &= run(8, 1800, [&] {
        int good = 0, total = 0;
        std::map<int, int> per_table;
        std::string first_bad;
        for (const auto& rec : book.records()) {
            if (rec.table < 6) continue;
            ++total;
            ++per_table[rec.table];
            const auto r = check_row(book, rec, 0);
            const bool ok = r.pass && r.analysis && r.analysis->weights.d == 12;
            good += ok;
            if (!ok && first_bad.empty())
                first_bad = "; first mismatch " + rec.id() + ": " + (r.analysis ? params(*r.analysis) : r.problems.front());
        }
        std::ostringstream os;
        os << good << '/' << total << " neighbours match (" << per_table[6] << '+' << per_table[7] << '+' << per_table[8]
           << " listed)" << first_bad;
        return Outcome{total > 0 && good == total, os.str()};
    });

    all &= run(9, 0, [] {
        int codes = 0, bad = 0;
        bool hamming = false;
        for (const auto& c : oracle::self_dual_corpus()) {
            if (c.rows.size() > 14 || !oracle::binary_self_dual(c.rows, c.n)) continue;
            ++codes;
            const Code code = Code::binary(c.n, c.rows);
            const auto full = oracle::weight_distribution(c.rows, c.n);
            const auto r = partial_weights(code, static_cast<int>(c.n));
            for (std::size_t w = 0; w <= c.n; ++w) bad += r.at(static_cast<int>(w)) != full[w];
            if (c.name == "extended Hamming") hamming = full[4] == 14 && full[8] == 1 && r.at(4) == 14 && r.at(8) == 1;
        }
        return Outcome{codes >= 20 && bad == 0 && hamming,
                       std::to_string(codes) + " codes, " + std::to_string(bad) + " differing counts" +
                           (hamming ? ", extended Hamming A4=14 A8=1" : ", extended Hamming mismatch")};
    });

    all &= run(10, 0, [&] {
        int certified = 0, total = 0;
        std::string first_bad;
        for (const auto& rec : book.records()) {
            const Code bin = binary_image(book.code(rec.id()));
            if (bin.length() != 68) continue;
            ++total;
            const auto r = partial_weights(bin, 11);
            const bool ok = r.certifies_distance_at_least(12);
            certified += ok;
            if (!ok && first_bad.empty()) first_bad = "; " + rec.id() + " has a word of weight " + std::to_string(*r.d);
        }
        return Outcome{total > 0 && certified == total,
                       std::to_string(certified) + "/" + std::to_string(total) + " length-68 codes certified d >= 12" + first_bad};
    });

    all &= run(11, 0, [] {
        int hits = 0, failures = 0;
        std::ostringstream os;
        // hits over F2+uF2 are rare; its trial budget is capped
        for (auto [p, r, budget] : {std::tuple{5, Ring::F2, 2000000L}, std::tuple{5, Ring::F2U, 300000L}}) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(p) * 31 + (r == Ring::F2U));
            int here = 0;
            for (long t = 0; t < budget && here < 100; ++t) {
                const auto s = random_spec(p, r, rng);
                if (!is_self_dual_construction(s)) continue;
                ++here;
                failures += !sum_q_invertible(s);
            }
            hits += here;
            os << "p=" << p << ' ' << ring_name(r) << ": " << here << " hits; ";
        }
        os << failures << " not invertible";
        return Outcome{hits >= 100 && failures == 0, os.str()};
    });

    std::cout << (all ? "all criteria pass" : "some criteria fail") << std::endl;
    return all ? 0 : 1;
}
