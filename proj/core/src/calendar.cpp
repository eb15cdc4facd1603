#include "car/calendar.hpp"

#include "car/errors.hpp"

#include <algorithm>

namespace car {

TradingCalendar::TradingCalendar(std::vector<Date> dates) : dates_(std::move(dates)) {
    if (dates_.empty()) throw Error(Errc::InvalidConfig, "trading calendar must be non-empty");
    for (std::size_t i = 1; i < dates_.size(); ++i)
        if (!(dates_[i - 1] < dates_[i]))
            throw Error(Errc::OutOfOrder, "calendar dates not strictly increasing");
}

TradingCalendar TradingCalendar::from_prices(const PriceSeries& prices) {
    std::vector<Date> dates;
    dates.reserve(prices.size());
    for (const auto& bar : prices.bars()) dates.push_back(bar.date);
    return TradingCalendar(std::move(dates));
}

bool TradingCalendar::contains(Date date) const {
    return std::binary_search(dates_.begin(), dates_.end(), date);
}

std::optional<Date> TradingCalendar::next_after(Date date) const {
    auto it = std::upper_bound(dates_.begin(), dates_.end(), date);
    if (it == dates_.end()) return std::nullopt;
    return *it;
}

Date attribute_session(const Timestamp& timestamp, const TradingCalendar& calendar,
                       const CutoffTime& cutoff) {
    LocalStamp local = local_stamp(timestamp, cutoff.offset_minutes);
    // Exactly-at-cutoff counts as same-day; only strictly-after rolls over.
    bool after_cutoff = local.minute_of_day > cutoff.minute_of_day ||
                        (local.minute_of_day == cutoff.minute_of_day && local.second_of_minute > 0);
    if (!after_cutoff && calendar.contains(local.date)) return local.date;

    auto next = calendar.next_after(local.date);
    if (!next)
        throw Error(Errc::HorizonExceeded,
                    "no trading day after " + local.date.to_string() + " in the calendar");
    return *next;
}

} // namespace car
