#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace allotax {

/// Text cleaning knobs. Defaults follow the toolkit's standard pipeline:
/// tokens containing "http" are dropped as links, and the listed HTML
/// artifacts are dropped by exact token match.
struct CleanOptions {
  std::vector<std::string> artifacts = {"&gt", "x200b", "&amp"};
  std::string link_marker = "http";
};

/// Lowercases, splits on whitespace, drops link tokens (substring match on
/// link_marker) and artifact tokens (exact match), strips punctuation
/// codepoints from the survivors, then drops tokens that became empty or
/// reassembled into a forbidden string.
///
/// Lowercasing covers ASCII and Latin-1; punctuation removal covers ASCII
/// non-alphanumerics plus the common Unicode punctuation blocks (Latin-1
/// punct/symbols, General and Supplemental Punctuation, CJK symbols,
/// small/fullwidth forms). Apostrophes and hyphens are removed in place,
/// never expanded to a split: "don't" becomes "dont".
std::vector<std::string> clean_text(std::string_view body,
                                    const CleanOptions& opts = {});

/// Space-joined n-grams in order; never spans outside `tokens`.
/// Fewer than n tokens yields an empty list. n == 0 is invalid.
std::vector<std::string> extract_ngrams(const std::vector<std::string>& tokens,
                                        int n);

}  // namespace allotax
