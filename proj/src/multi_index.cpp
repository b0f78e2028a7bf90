#include "polymom/multi_index.hpp"

#include <mutex>

namespace polymom {

static void enumerate(int d, int total, MultiIndex& cur, int pos,
                      std::vector<MultiIndex>& out) {
    if (pos == d - 1) {
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur[pos] = v;
        enumerate(d, total - v, cur, pos + 1, out);
    }
}

IndexTable::IndexTable(int d_, int r_) : d(d_), r(r_) {
    if (d < 1 || r < 0) throw validation_error("IndexTable requires d >= 1, r >= 0");
    MultiIndex cur(d);
    for (int t = 0; t <= r; ++t) enumerate(d, t, cur, 0, idx);
    for (int i = 0; i < static_cast<int>(idx.size()); ++i) pos[idx[i]] = i;
}

MultiIndex parse_index_key(const std::string& key, int d, int r) {
    MultiIndex I;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty() || cur.size() > 6)
            throw validation_error("bad index key '" + key + "'");
        for (char ch : cur)
            if (ch < '0' || ch > '9') throw validation_error("bad index key '" + key + "'");
        I.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char ch : key) {
        if (ch == ',')
            flush();
        else
            cur += ch;
    }
    flush();
    if (static_cast<int>(I.size()) != d)
        throw validation_error("index key '" + key + "' does not have d parts");
    if (mi_total(I) > r) throw validation_error("index key '" + key + "' exceeds order r");
    return I;
}

std::shared_ptr<const IndexTable> table_for(int d, int r) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const IndexTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(d, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto tab = std::make_shared<const IndexTable>(d, r);
    cache[key] = tab;
    return tab;
}

} // namespace polymom
