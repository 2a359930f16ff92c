"""Cricket squad recommendation from domestic scorecards.

Scorecards are imported into a :class:`MatchStore`, aggregated per player,
rated per role on a 0-100 scale, and a quota-constrained squad is selected.
"""

from .aggregate import (
    WORST,
    AllRounderDelta,
    BattingStats,
    BowlingStats,
    batting_aggregate,
    bowling_aggregate,
    played_international_recent,
)
from .datastore import (
    BattingEntry,
    BowlingEntry,
    BowlingStyle,
    Innings,
    MatchScorecard,
    MatchStore,
    PlayerRecord,
    ScorecardError,
    StoreFormatError,
)
from .rating import (
    PoolMinMaxScaler,
    RatingConfig,
    RatingPoint,
    RoleCategory,
    RoleProfile,
    RoleRater,
    classify_roles,
    normalize,
    rate_allrounder,
    rate_keeper,
    rate_lower,
    rate_middle,
    rate_opener,
    rate_pacer,
    rate_spinner,
    rate_store,
)
from .selection import (
    DEFAULT_TEMPLATE,
    BALANCED_TEMPLATE,
    Overrides,
    SelectionError,
    Squad,
    SquadComparison,
    SquadSelector,
    SquadTemplate,
    brute_force_select,
    compare_squads,
    normalize_name,
    select_squad,
)

__version__ = "0.1.0"
