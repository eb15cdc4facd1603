#pragma once

#include "car/dates.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace car {

/// News score on the admissible grid {-1.0, -0.9, ..., +1.0}. Stored as
/// value*10 in an integer so grid membership and equality are exact.
class Score {
public:
    Score() = default;

    /// From grid units, i.e. value*10 in [-10, 10].
    static Score from_grid(int grid);

    /// From a real that must already sit on the grid (within 1e-9).
    static Score from_value(double value);

    int grid() const { return grid_; }
    double value() const { return grid_ / 10.0; }

    /// Canonical one-decimal rendering: "0.7", "-0.8", "1.0".
    std::string to_string() const;

    auto operator<=>(const Score&) const = default;

private:
    explicit Score(int grid) : grid_(grid) {}
    std::int8_t grid_ = 0;
};

enum class Category {
    GeopoliticalEvent,
    MacroDataRelease,
    CentralBankPolicy,
    CurrencyExchangeRates,
    StockMarketFluctuations,
    GoldSupplyDemand,
};

inline constexpr int kCategoryCount = 6;

/// Canonical display name, e.g. "Gold supply and demand situation".
const char* category_name(Category c);
/// Short token used in files/CLI, e.g. "gold_supply_demand".
const char* category_token(Category c);
std::optional<Category> category_from_string(const std::string& text);

enum class StrategyKind {
    OneStep,
    Classify,
    CAR,
    RethinkOnly,
    RandomBaseline,
    BuyAndHold,
};

const char* strategy_token(StrategyKind kind);
std::optional<StrategyKind> strategy_from_string(const std::string& text);
bool is_scoring_kind(StrategyKind kind);

enum class Direction { Contrarian, Aligned };

const char* direction_token(Direction d);
std::optional<Direction> direction_from_string(const std::string& text);

struct NewsArticle {
    std::string id;
    Timestamp timestamp;
    std::string text;
    std::optional<std::string> source;
};

struct PriceBar {
    Date date;
    double close = 0.0; // currency units per gram, > 0
};

/// Daily close series; dates strictly increasing, never empty.
class PriceSeries {
public:
    explicit PriceSeries(std::vector<PriceBar> bars);

    const std::vector<PriceBar>& bars() const { return bars_; }
    std::size_t size() const { return bars_.size(); }
    const PriceBar& front() const { return bars_.front(); }
    const PriceBar& back() const { return bars_.back(); }

    std::optional<double> close_on(Date date) const;

    /// Sub-series restricted to [start, end]; throws Errc::EmptyOverlap
    /// when no bar falls inside.
    PriceSeries slice(std::optional<Date> start, std::optional<Date> end) const;

private:
    std::vector<PriceBar> bars_;
};

struct StrategyConfig {
    StrategyKind kind = StrategyKind::CAR;
    int window = 20;
    double threshold = 0.0;
    Direction direction = Direction::Aligned;
    double fee_rate = 0.0;
    CutoffTime cutoff_time{};
    double initial_capital = 1.0;
    // RandomBaseline only: RNG seed and the number of Buy/Sell actions the
    // baseline aims to emit over the run.
    std::uint64_t seed = 0;
    int random_trades = 60;
};

/// Config with the per-kind defaults applied: window 5 + Contrarian for the
/// single-pass prompt strategies, window 20 + Aligned for CAR.
StrategyConfig default_config(StrategyKind kind);

/// Returns `config` unchanged when all invariants hold.
StrategyConfig validate_config(const StrategyConfig& config);

enum class Action { Buy, Sell, Hold };

const char* action_token(Action a);

enum class Side { Buy, Sell };

inline const char* side_token(Side s) { return s == Side::Buy ? "buy" : "sell"; }

struct Trade {
    Date date;
    Side side = Side::Buy;
    double price = 0.0;
    double fee_paid = 0.0;
};

struct EquityPoint {
    Date date;
    double value = 0.0;
};

struct BacktestResult {
    std::vector<Trade> trades;
    std::vector<EquityPoint> equity;
    double total_return = 0.0;
    std::optional<double> sharpe;
    int n_trades = 0;
};

struct ScoreRecord {
    std::string article_id;
    StrategyKind strategy = StrategyKind::OneStep;
    std::optional<Category> category;
    Score score;
    std::string explanation;
    Date attributed_date;
    std::string transcript_hash;
};

} // namespace car
