#pragma once

// Canonical multiple-choice blocks used as golden files.

#include <string>

namespace qafix {

inline const std::string kUmlSample =
    "Which diagram in UML emphasizes the time-ordering of messages?\n"
    "A. Activity\n"
    "B. Sequence\n"
    "C. Collaboration\n"
    "D. Class\n"
    "Answer:A\n"
    "Explanation:This diagram is a model describing how groups of objects collaborate in some behavior over time.";

inline const std::string kOddOneOutSample =
    "Pick the odd one out.\n"
    "A. File transfer\n"
    "B. File download\n"
    "C. E-mail\n"
    "D. Interactive games\n"
    "Answer:D\n"
    "Explanation: File transfer, File download, and Email are services provided by the application layer and there "
    "are message and data-oriented.";

// Same questions with numeric and roman serials; the answers name serials
// that map to the letters in the canonical blocks above (3 -> C, iv -> D).
inline const std::string kNumericVariant =
    "7) Which protocol resolves host names?\n"
    "1) ARP\n"
    "2) DHCP\n"
    "3) DNS\n"
    "4) ICMP\n"
    "Ans: 3";

inline const std::string kNumericExpected =
    "Which protocol resolves host names?\n"
    "A. ARP\n"
    "B. DHCP\n"
    "C. DNS\n"
    "D. ICMP\n"
    "Answer:C";

inline const std::string kRomanVariant =
    "Pick the odd one out.\n"
    "i. File transfer\n"
    "ii. File download\n"
    "iii. E-mail\n"
    "iv. Interactive games\n"
    "Answer: iv\n"
    "Explanation: File transfer, File download, and Email are services provided by the application layer and there "
    "are message and data-oriented.";

}  // namespace qafix
