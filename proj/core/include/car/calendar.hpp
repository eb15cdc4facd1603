#pragma once

#include "car/dates.hpp"
#include "car/domain.hpp"

#include <vector>

namespace car {

/// The set of tradable days. Derived from the price series: the paper data
/// carries no separate holiday calendar, so price dates define it.
class TradingCalendar {
public:
    explicit TradingCalendar(std::vector<Date> dates);
    static TradingCalendar from_prices(const PriceSeries& prices);

    const std::vector<Date>& dates() const { return dates_; }
    bool contains(Date date) const;
    Date first() const { return dates_.front(); }
    Date last() const { return dates_.back(); }

    /// Earliest trading day strictly after `date`, if any.
    std::optional<Date> next_after(Date date) const;

private:
    std::vector<Date> dates_;
};

/// Maps a news timestamp to the trading day whose close it can influence:
/// the same day when it lands on a trading day at or before the cutoff
/// (exchange-local), otherwise the next trading day. Throws
/// Errc::HorizonExceeded when no later trading day exists.
Date attribute_session(const Timestamp& timestamp, const TradingCalendar& calendar,
                       const CutoffTime& cutoff);

} // namespace car
