"""
Redis store for computation results

A result is stored under `<kind prefix><md5 of its parameters>` inside an
envelope tagged with CacheConfig.RESULT_FORMAT; entries written under another
format read as misses.
"""
import json
import hashlib
import logging
from typing import Any, Dict, Optional

import redis
from pydantic import BaseModel

from .config import CacheConfig

logger = logging.getLogger(__name__)


class CacheManager:
    """Result cache over an optional Redis client; without one every call is a miss"""

    def __init__(self, redis_client: Optional[redis.Redis] = None):
        self.redis_client = redis_client
        self.config = CacheConfig()
        self.enabled = redis_client is not None

        if not self.enabled:
            logger.warning("Cache manager initialized without Redis client - caching disabled")

    def key_for(self, kind: str, params: Dict[str, Any]) -> str:
        """Cache key of one computation"""
        canonical = json.dumps(params, sort_keys=True, default=str)
        digest = hashlib.md5(canonical.encode()).hexdigest()
        return f"{self.config.get_key_prefix(kind)}{digest}"

    def _encode(self, result: Any) -> str:
        payload = result.model_dump(mode="json") if isinstance(result, BaseModel) else result
        return json.dumps({"format": self.config.RESULT_FORMAT, "result": payload}, default=str)

    def _decode(self, raw: str) -> Optional[Any]:
        try:
            envelope = json.loads(raw)
        except (json.JSONDecodeError, TypeError):
            logger.warning("Discarding unreadable cache entry")
            return None
        if not isinstance(envelope, dict) or envelope.get("format") != self.config.RESULT_FORMAT:
            return None
        return envelope.get("result")

    def store(self, kind: str, params: Dict[str, Any], result: Any, ttl: Optional[int] = None) -> bool:
        """Store a result; False when caching is off or Redis fails"""
        if not self.enabled:
            return False

        key = self.key_for(kind, params)
        ttl = ttl if ttl is not None else self.config.get_ttl_for_key_type(kind)
        try:
            self.redis_client.setex(key, ttl, self._encode(result))
            logger.debug(f"Cache SET: {key} (TTL: {ttl}s)")
            return True
        except Exception as e:
            logger.error(f"Cache SET error for {key}: {e}")
            return False

    def fetch(self, kind: str, params: Dict[str, Any]) -> Optional[Any]:
        """The stored result as plain JSON data, or None on a miss"""
        if not self.enabled:
            return None

        key = self.key_for(kind, params)
        try:
            raw = self.redis_client.get(key)
        except Exception as e:
            logger.error(f"Cache GET error for {key}: {e}")
            return None

        if raw is None:
            logger.debug(f"Cache MISS: {key}")
            return None
        result = self._decode(raw)
        logger.debug(f"Cache {'HIT' if result is not None else 'STALE'}: {key}")
        return result

    def forget(self, kind: str, params: Dict[str, Any]) -> bool:
        if not self.enabled:
            return False
        try:
            return bool(self.redis_client.delete(self.key_for(kind, params)))
        except Exception as e:
            logger.error(f"Cache DELETE error for {kind}: {e}")
            return False

    def invalidate_kind(self, kind: str) -> int:
        """Drop every stored result of one kind"""
        if not self.enabled:
            return 0

        pattern = f"{self.config.get_key_prefix(kind)}*"
        try:
            keys = list(self.redis_client.scan_iter(match=pattern))
            if not keys:
                return 0
            deleted = self.redis_client.delete(*keys)
            logger.info(f"Cache INVALIDATE: {deleted} '{kind}' results")
            return deleted
        except Exception as e:
            logger.error(f"Cache INVALIDATE error for '{kind}': {e}")
            return 0

    def health_check(self) -> Dict[str, Any]:
        """Check cache health and return status"""
        if not self.enabled:
            return {"status": "disabled", "redis_available": False}

        try:
            probe = f"{self.config.get_key_prefix('health')}probe"
            self.redis_client.setex(probe, 10, "test")
            result = self.redis_client.get(probe)
            self.redis_client.delete(probe)

            info = self.redis_client.info()

            return {
                "status": "healthy" if result == "test" else "error",
                "redis_available": True,
                "result_format": self.config.RESULT_FORMAT,
                "connected_clients": info.get("connected_clients", 0),
                "used_memory_human": info.get("used_memory_human", "unknown"),
            }
        except Exception as e:
            logger.error(f"Cache health check failed: {e}")
            return {
                "status": "error",
                "redis_available": False,
                "error": str(e)
            }
