#pragma once

#include <stdexcept>
#include <string>

namespace factortree {

enum class Errc {
  // ingestion
  missing_column,
  bad_date,
  non_positive_price,
  duplicate_date,
  too_short,
  header_not_found,
  bad_row,
  empty_panel,
  length_mismatch,
  empty_intersection,
  unknown_ticker,
  // statistics
  empty_series,
  zero_variance,
  // tree engine
  empty_node,
  degenerate_split,
  // linear baseline
  rank_deficient,
  // reporting
  not_a_split,
  zero_drop,
  // factor client
  network_error,
  timeout,
  not_an_archive,
  multiple_entries,
  // misc
  io_error,
  bad_argument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::missing_column: return "MissingColumn";
    case Errc::bad_date: return "BadDate";
    case Errc::non_positive_price: return "NonPositivePrice";
    case Errc::duplicate_date: return "DuplicateDate";
    case Errc::too_short: return "TooShort";
    case Errc::header_not_found: return "HeaderNotFound";
    case Errc::bad_row: return "BadRow";
    case Errc::empty_panel: return "EmptyPanel";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::empty_intersection: return "EmptyIntersection";
    case Errc::unknown_ticker: return "UnknownTicker";
    case Errc::empty_series: return "EmptySeries";
    case Errc::zero_variance: return "ZeroVariance";
    case Errc::empty_node: return "EmptyNode";
    case Errc::degenerate_split: return "DegenerateSplit";
    case Errc::rank_deficient: return "RankDeficient";
    case Errc::not_a_split: return "NotASplit";
    case Errc::zero_drop: return "ZeroDrop";
    case Errc::network_error: return "NetworkError";
    case Errc::timeout: return "Timeout";
    case Errc::not_an_archive: return "NotAnArchive";
    case Errc::multiple_entries: return "MultipleEntries";
    case Errc::io_error: return "IoError";
    case Errc::bad_argument: return "BadArgument";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace factortree
