"""
Database Module
SQLite result cache for invariant reports, classifications and verdicts
"""

import hashlib
import json
import logging
import os
import sqlite3
from typing import Any, Dict, Optional, Sequence

logger = logging.getLogger(__name__)


class ResultCache:
    """Handles cached results keyed by normalized input, engine version and settings"""

    def __init__(self, cache_dir: str, version: str):
        self.db_path = os.path.join(cache_dir, "results.db")
        self.version = version
        self.logger = logging.getLogger("database")

        os.makedirs(cache_dir, exist_ok=True)
        self.init_database()

    def init_database(self):
        """Initialize database tables"""
        try:
            with sqlite3.connect(self.db_path) as conn:
                cursor = conn.cursor()
                cursor.execute('''
                    CREATE TABLE IF NOT EXISTS results (
                        key TEXT PRIMARY KEY,
                        kind TEXT NOT NULL,
                        version TEXT NOT NULL,
                        payload TEXT NOT NULL,
                        created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP
                    )
                ''')
                conn.commit()
                self.logger.debug(f"Result cache ready at {self.db_path}")
        except sqlite3.Error as e:
            self.logger.error(f"Error initializing result cache: {str(e)}")
            raise

    def key(self, kind: str, parts: Sequence[str], strict: bool, settings: Optional[Dict[str, Any]] = None) -> str:
        """SHA-256 over the kind, normalized inputs, engine version, strict flag and settings"""
        material = json.dumps({
            "kind": kind,
            "parts": list(parts),
            "version": self.version,
            "strict": strict,
            "settings": settings or {},
        }, sort_keys=True)
        return hashlib.sha256(material.encode()).hexdigest()

    def get(self, key: str) -> Optional[Dict[str, Any]]:
        """Cached payload, or None on a miss or a stale version"""
        try:
            with sqlite3.connect(self.db_path) as conn:
                cursor = conn.cursor()
                cursor.execute('SELECT version, payload FROM results WHERE key = ?', (key,))
                row = cursor.fetchone()
        except sqlite3.Error as e:
            self.logger.warning(f"Result cache unreadable, ignoring it: {str(e)}")
            return None

        if row is None:
            self.logger.debug(f"cache miss {key[:12]}")
            return None
        version, payload = row
        if version != self.version:
            self.logger.warning(f"Ignoring cached result from engine version {version}")
            return None
        self.logger.debug(f"cache hit {key[:12]}")
        return json.loads(payload)

    def put(self, key: str, kind: str, payload: Dict[str, Any]):
        """Store a payload; one transaction per write"""
        try:
            with sqlite3.connect(self.db_path) as conn:
                conn.execute('''
                    INSERT OR REPLACE INTO results (key, kind, version, payload)
                    VALUES (?, ?, ?, ?)
                ''', (key, kind, self.version, json.dumps(payload, ensure_ascii=False)))
                conn.commit()
        except sqlite3.Error as e:
            self.logger.warning(f"Could not write result cache: {str(e)}")

    def purge_stale(self) -> int:
        """Delete rows written by other engine versions"""
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.execute('DELETE FROM results WHERE version != ?', (self.version,))
            conn.commit()
            return cursor.rowcount

    def count(self) -> int:
        with sqlite3.connect(self.db_path) as conn:
            return conn.execute('SELECT COUNT(*) FROM results').fetchone()[0]
