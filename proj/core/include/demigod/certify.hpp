#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "demigod/cube.hpp"

namespace demigod {

struct CertificateCheck {
  bool valid = false;
  std::size_t length = 0;  // half-turn metric
};

// Replays `seq` from `s`. InvalidState if `s` is not a cube state.
CertificateCheck verify_certificate(const CubieState& s, const MoveSequence& seq);
// Same, parsing `moves` first (ParseFailure on bad tokens).
CertificateCheck verify_certificate(const CubieState& s, std::string_view moves);

struct CampaignIssue {
  std::size_t line = 0;
  std::uint64_t index = 0;
  std::string reason;
};

struct CampaignSummary {
  std::uint64_t total = 0;
  std::uint64_t verified = 0;
  std::uint64_t length_sum = 0;      // over verified records
  double mean = 0;                   // length_sum / verified
  std::vector<CampaignIssue> failures;  // sorted by index, then line
};

// Rebuilds every state from (seed, index), replays its certificate and checks
// the recorded length and, when present, the embedded facelets. Structural
// CSV errors throw ParseFailure; bad records become failures.
CampaignSummary verify_campaign(std::istream& csv);
CampaignSummary verify_campaign(const std::filesystem::path& csv);

}  // namespace demigod
