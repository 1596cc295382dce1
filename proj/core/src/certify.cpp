#include "demigod/certify.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

#include "demigod/campaign.hpp"
#include "demigod/errors.hpp"
#include "demigod/sampler.hpp"

namespace demigod {

CertificateCheck verify_certificate(const CubieState& s, const MoveSequence& seq) {
  if (!is_valid(s)) throw InvalidState("certificate start state is not a cube state");
  return {apply_sequence(s, seq).is_solved(), seq.length()};
}

CertificateCheck verify_certificate(const CubieState& s, std::string_view moves) {
  return verify_certificate(s, MoveSequence::parse(moves));
}

CampaignSummary verify_campaign(std::istream& csv) {
  CampaignSummary out;
  for (const auto& row : read_campaign_rows(csv)) {
    ++out.total;
    auto fail = [&](std::string reason) { out.failures.push_back({row.line, row.index, std::move(reason)}); };
    if (row.solver != "twophase" && row.solver != "beginner") {
      fail("unknown solver '" + row.solver + "'");
      continue;
    }
    const CubieState s = sample_uniform({row.seed, SamplerScheme::fix}, row.index);
    if (row.state && *row.state != to_facelets(s)) {
      fail("embedded state does not match (seed, index)");
      continue;
    }
    MoveSequence seq;
    try {
      seq = MoveSequence::parse(row.solution);
    } catch (const ParseFailure& e) {
      fail(std::string("unreadable solution: ") + e.what());
      continue;
    }
    const CertificateCheck check = verify_certificate(s, seq);
    if (!check.valid) {
      fail("solution does not solve the state");
      continue;
    }
    if (check.length != row.length) {
      fail("recorded length " + std::to_string(row.length) + " but solution has " + std::to_string(check.length));
      continue;
    }
    ++out.verified;
    out.length_sum += check.length;
  }
  if (out.verified) out.mean = static_cast<double>(out.length_sum) / static_cast<double>(out.verified);
  std::sort(out.failures.begin(), out.failures.end(),
            [](const auto& a, const auto& b) { return std::tie(a.index, a.line) < std::tie(b.index, b.line); });
  return out;
}

CampaignSummary verify_campaign(const std::filesystem::path& csv) {
  std::ifstream in(csv);
  if (!in) throw IoFailure("cannot open " + csv.string());
  return verify_campaign(in);
}

}  // namespace demigod
