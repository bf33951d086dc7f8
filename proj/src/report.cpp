#include "holodual/report.hpp"

#include <algorithm>

namespace holodual {

bool Report::passed() const {
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

int Report::fail_count() const {
    return int(std::count_if(records.begin(), records.end(),
                             [](const CheckRecord& r) { return !r.pass; }));
}

CheckRecord& Report::add(const std::string& check, bool pass, const std::string& anchor,
                         std::optional<int> level, const std::string& witness) {
    records.push_back(CheckRecord{check, level, pass, pass ? "" : witness, anchor});
    return records.back();
}

void Report::merge(const Report& other, std::optional<int> level, const std::string& prefix) {
    for (const CheckRecord& r : other.records) {
        CheckRecord copy = r;
        if (!copy.level) copy.level = level;
        if (!prefix.empty()) copy.check = prefix + copy.check;
        records.push_back(std::move(copy));
    }
}

} // namespace holodual
