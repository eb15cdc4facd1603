#include "car/domain.hpp"

#include "car/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace car {

Score Score::from_grid(int grid) {
    if (grid < -10 || grid > 10)
        throw Error(Errc::ScoreOutOfRange, "grid unit " + std::to_string(grid) + " outside [-10, 10]");
    return Score(grid);
}

Score Score::from_value(double value) {
    double scaled = value * 10.0;
    double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > 1e-9)
        throw Error(Errc::OffGridScore, std::to_string(value) + " is not a multiple of 0.1");
    return from_grid(static_cast<int>(rounded));
}

std::string Score::to_string() const {
    int a = std::abs(grid_);
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%s%d.%d", grid_ < 0 ? "-" : "", a / 10, a % 10);
    return buf;
}

const char* category_name(Category c) {
    switch (c) {
    case Category::GeopoliticalEvent: return "Geopolitical event";
    case Category::MacroDataRelease: return "Macroeconomic data release";
    case Category::CentralBankPolicy: return "Central bank policy and action";
    case Category::CurrencyExchangeRates: return "Currency exchange rates";
    case Category::StockMarketFluctuations: return "Stock market fluctuations";
    case Category::GoldSupplyDemand: return "Gold supply and demand situation";
    }
    return "?";
}

const char* category_token(Category c) {
    switch (c) {
    case Category::GeopoliticalEvent: return "geopolitical_event";
    case Category::MacroDataRelease: return "macro_data_release";
    case Category::CentralBankPolicy: return "central_bank_policy";
    case Category::CurrencyExchangeRates: return "currency_exchange_rates";
    case Category::StockMarketFluctuations: return "stock_market_fluctuations";
    case Category::GoldSupplyDemand: return "gold_supply_demand";
    }
    return "?";
}

std::optional<Category> category_from_string(const std::string& text) {
    std::string lowered;
    lowered.reserve(text.size());
    for (char ch : text) lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    for (int i = 0; i < kCategoryCount; ++i) {
        auto c = static_cast<Category>(i);
        std::string name = category_name(c);
        for (char& ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        if (lowered == category_token(c) || lowered == name) return c;
    }
    return std::nullopt;
}

const char* strategy_token(StrategyKind kind) {
    switch (kind) {
    case StrategyKind::OneStep: return "one_step";
    case StrategyKind::Classify: return "classify";
    case StrategyKind::CAR: return "car";
    case StrategyKind::RethinkOnly: return "rethink_only";
    case StrategyKind::RandomBaseline: return "random";
    case StrategyKind::BuyAndHold: return "buy_and_hold";
    }
    return "?";
}

std::optional<StrategyKind> strategy_from_string(const std::string& text) {
    for (StrategyKind k : {StrategyKind::OneStep, StrategyKind::Classify, StrategyKind::CAR,
                           StrategyKind::RethinkOnly, StrategyKind::RandomBaseline,
                           StrategyKind::BuyAndHold}) {
        if (text == strategy_token(k)) return k;
    }
    if (text == "onestep") return StrategyKind::OneStep; // tolerated spelling
    return std::nullopt;
}

bool is_scoring_kind(StrategyKind kind) {
    switch (kind) {
    case StrategyKind::OneStep:
    case StrategyKind::Classify:
    case StrategyKind::CAR:
    case StrategyKind::RethinkOnly:
        return true;
    default:
        return false;
    }
}

const char* direction_token(Direction d) {
    return d == Direction::Contrarian ? "contrarian" : "aligned";
}

std::optional<Direction> direction_from_string(const std::string& text) {
    if (text == "contrarian") return Direction::Contrarian;
    if (text == "aligned") return Direction::Aligned;
    return std::nullopt;
}

PriceSeries::PriceSeries(std::vector<PriceBar> bars) : bars_(std::move(bars)) {
    if (bars_.empty()) throw Error(Errc::InvalidConfig, "price series must be non-empty");
    for (std::size_t i = 0; i < bars_.size(); ++i) {
        if (!(bars_[i].close > 0.0))
            throw Error(Errc::NonPositiveClose,
                        "close " + std::to_string(bars_[i].close) + " on " + bars_[i].date.to_string());
        if (i > 0 && !(bars_[i - 1].date < bars_[i].date))
            throw Error(Errc::OutOfOrder, "dates not strictly increasing at " + bars_[i].date.to_string());
    }
}

std::optional<double> PriceSeries::close_on(Date date) const {
    auto it = std::lower_bound(bars_.begin(), bars_.end(), date,
                               [](const PriceBar& b, Date d) { return b.date < d; });
    if (it == bars_.end() || it->date != date) return std::nullopt;
    return it->close;
}

PriceSeries PriceSeries::slice(std::optional<Date> start, std::optional<Date> end) const {
    std::vector<PriceBar> out;
    for (const auto& bar : bars_) {
        if (start && bar.date < *start) continue;
        if (end && *end < bar.date) continue;
        out.push_back(bar);
    }
    if (out.empty()) throw Error(Errc::EmptyOverlap, "no price bars inside the requested date bounds");
    return PriceSeries(std::move(out));
}

StrategyConfig default_config(StrategyKind kind) {
    StrategyConfig cfg;
    cfg.kind = kind;
    switch (kind) {
    case StrategyKind::OneStep:
    case StrategyKind::Classify:
    case StrategyKind::RethinkOnly:
        cfg.window = 5;
        cfg.direction = Direction::Contrarian;
        break;
    case StrategyKind::CAR:
        cfg.window = 20;
        cfg.direction = Direction::Aligned;
        break;
    case StrategyKind::RandomBaseline:
    case StrategyKind::BuyAndHold:
        cfg.window = 5;
        cfg.direction = Direction::Contrarian;
        break;
    }
    return cfg;
}

StrategyConfig validate_config(const StrategyConfig& config) {
    if (config.window <= 0)
        throw Error(Errc::InvalidConfig, "window must be positive, got " + std::to_string(config.window));
    if (config.fee_rate < 0.0)
        throw Error(Errc::InvalidConfig, "fee_rate must be >= 0, got " + std::to_string(config.fee_rate));
    if (!(config.initial_capital > 0.0))
        throw Error(Errc::InvalidConfig, "initial_capital must be positive");
    if (config.random_trades < 0)
        throw Error(Errc::InvalidConfig, "random_trades must be >= 0");
    return config;
}

const char* action_token(Action a) {
    switch (a) {
    case Action::Buy: return "buy";
    case Action::Sell: return "sell";
    case Action::Hold: return "hold";
    }
    return "?";
}

} // namespace car
