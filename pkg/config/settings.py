# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import os

from dotenv import load_dotenv

from utils.misc import str_to_bool

load_dotenv()

BASE_DIRECTORY = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# 列挙の次元上限 (これを超えたら有限型でない可能性として報告する)
MAX_DIM = int(os.getenv("HCAT_MAX_DIM", 64))

# τ_H 周期探索の上限
PERIOD_BOUND = int(os.getenv("HCAT_PERIOD_BOUND", 24))

# 乱数シード (同じ入力 + 同じシード => 同じレポート)
SEED = int(os.getenv("HCAT_SEED", 0))

## 同型探索・分解探索のパラメータ
RANDOM_TRIALS = int(os.getenv("HCAT_RANDOM_TRIALS", 64))
EXHAUSTIVE_LIMIT = int(os.getenv("HCAT_EXHAUSTIVE_LIMIT", 4096))

# check-paper の並列ワーカー数
WORKERS = int(os.getenv("HCAT_WORKERS", 4))

LOG_LEVEL = os.getenv("HCAT_LOG_LEVEL", "INFO").upper()

ALGEBRA_DIRECTORY = os.getenv(
    "HCAT_ALGEBRA_DIRECTORY", os.path.join(BASE_DIRECTORY, "data", "algebras")
)
REPORT_DIRECTORY = os.getenv("HCAT_REPORT_DIRECTORY", "./reports")

# AR 列の構成時に毎回カタログ検証を行うか
VERIFY_SEQUENCES = str_to_bool(os.getenv("HCAT_VERIFY_SEQUENCES", "true"))

for _name, _value in (
    ("HCAT_MAX_DIM", MAX_DIM),
    ("HCAT_PERIOD_BOUND", PERIOD_BOUND),
    ("HCAT_RANDOM_TRIALS", RANDOM_TRIALS),
    ("HCAT_EXHAUSTIVE_LIMIT", EXHAUSTIVE_LIMIT),
    ("HCAT_WORKERS", WORKERS),
):
    if _value <= 0:
        raise ValueError(f"{_name} must be positive, got {_value}")

if SEED < 0:
    raise ValueError(f"HCAT_SEED must be non-negative, got {SEED}")

if LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
    raise ValueError(f"Unknown HCAT_LOG_LEVEL: {LOG_LEVEL}")
