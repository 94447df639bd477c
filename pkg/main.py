from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from src.routes import (
    constructions_router,
    analysis_router,
    ramsey_router,
    random_router,
    groundset_router,
)
from src.cache import get_cache_manager
import os
import logging

# Configure logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

app = FastAPI(
    title="Cubegraph API",
    version="1.0.0",
    description="Subcube intersection graphs: extremal constructions, Ramsey values and random families"
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=[
        "http://localhost:3000",
        os.getenv("FRONTEND_URL", "")
    ],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

@app.on_event("startup")
async def startup_event():
    """Report cache availability on startup"""
    health = get_cache_manager().health_check()
    if health.get("status") == "healthy":
        logger.info("Redis connection established")
    else:
        logger.warning("Redis not available - result cache disabled")

# Include routers
app.include_router(constructions_router)
app.include_router(analysis_router)
app.include_router(ramsey_router)
app.include_router(random_router)
app.include_router(groundset_router)

@app.get("/")
def root():
    return {
        "message": "Cubegraph API",
        "version": "1.0.0",
        "status": "running",
        "description": "Subcube intersection graphs of {0,1}^d"
    }

@app.get("/health")
def health_check():
    """Health check endpoint for monitoring"""
    cache = get_cache_manager().health_check()

    return {
        "status": "healthy",
        "redis": "connected" if cache.get("status") == "healthy" else "disconnected",
        "version": "1.0.0",
        "features": {
            "caching": cache.get("status") == "healthy",
        }
    }
