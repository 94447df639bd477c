"""
Cache configuration settings
"""
import os


class CacheConfig:
    """Configuration class for result cache settings"""

    REDIS_URL = os.getenv("REDIS_URL", "redis://localhost:6379/0")
    REDIS_MAX_CONNECTIONS = int(os.getenv("REDIS_MAX_CONNECTIONS", "20"))

    # TTL values (in seconds)
    DEFAULT_TTL = int(os.getenv("RESULT_CACHE_TTL", "3600"))  # 1 hour
    RAMSEY_TTL = int(os.getenv("RAMSEY_CACHE_TTL", "604800"))  # 7 days
    OPTIMIZER_TTL = int(os.getenv("OPTIMIZER_CACHE_TTL", "86400"))  # 24 hours
    ANALYSIS_TTL = int(os.getenv("ANALYSIS_CACHE_TTL", "3600"))  # 1 hour

    # Bump when a cached computation changes its output; older entries read as misses
    RESULT_FORMAT = "cubegraph-result/1"

    # Cache key prefixes
    RAMSEY_PREFIX = "ramsey:"
    OPTIMIZER_PREFIX = "optimizer:"
    ANALYSIS_PREFIX = "analysis:"
    CONSTRUCTION_PREFIX = "construction:"
    HEALTH_PREFIX = "cubegraph-health:"

    @classmethod
    def get_ttl_for_key_type(cls, key_type: str) -> int:
        """Get TTL based on key type"""
        ttl_map = {
            "ramsey": cls.RAMSEY_TTL,
            "optimizer": cls.OPTIMIZER_TTL,
            "analysis": cls.ANALYSIS_TTL,
        }
        return ttl_map.get(key_type, cls.DEFAULT_TTL)

    @classmethod
    def get_key_prefix(cls, key_type: str) -> str:
        """Get key prefix based on type"""
        prefix_map = {
            "ramsey": cls.RAMSEY_PREFIX,
            "optimizer": cls.OPTIMIZER_PREFIX,
            "analysis": cls.ANALYSIS_PREFIX,
            "construction": cls.CONSTRUCTION_PREFIX,
            "health": cls.HEALTH_PREFIX,
        }
        return prefix_map.get(key_type, "")
