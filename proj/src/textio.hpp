/**
 * @file textio.hpp
 * @brief Deterministic ASCII rendering of tables and reports.
 *
 * Column order is fixed everywhere: irreducibles in catalogue order and
 * conjugacy classes by least representative, so outputs are diffable.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "center.hpp"
#include "charfun.hpp"
#include "twogroup.hpp"
#include "twrep.hpp"

namespace twochar {

/// Left-aligned column layout with two-space gaps; one trailing newline.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

/// A dual-group character shown by its values on the pi2 factor generators.
std::string eigencharacter_string(const FiniteTwoGroup& tg,
                                  const DualCharacter& chi);

std::string describe_text(const FiniteTwoGroup& tg);
std::string irreps_text(const FiniteTwoGroup& tg,
                        const std::vector<MonomialTwoRep>& irreps);
std::string chartable_text(const FiniteTwoGroup& tg,
                           const std::vector<MonomialTwoRep>& irreps);
std::string jointtable_text(const FiniteTwoGroup& tg,
                            const std::vector<MonomialTwoRep>& irreps);
std::string fusion_text(const std::vector<std::string>& names,
                        const std::vector<std::vector<std::vector<int>>>& table);
std::string inner_text(const std::vector<std::string>& names,
                       const std::vector<std::vector<std::size_t>>& matrix);
std::string center_text(const AlgebraStructure& algebra,
                        const LagrangianReport& report);

}  // namespace twochar
