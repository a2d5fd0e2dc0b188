#pragma once

#include <string>
#include <string_view>

namespace tb {

// Environment rows of the generalization matrix: a shared training
// distribution, a held-out default test split, and three out-of-distribution
// variants. What each row binds to is task-specific (see the per-task
// make_*_env factories).
enum class EnvId { kTrain, kDefaultTest, kOod1, kOod2, kOod3 };

std::string_view to_string(EnvId id);
EnvId env_id_from_string(std::string_view s);

}  // namespace tb
