"""
valuta - matroid valuative-invariant workbench

Flask application package; the command-line surface lives in valuta.cli.
"""

import os
import secrets

from dotenv import load_dotenv
from flask import Flask


def create_app(config_name: str = None):
    """Application factory pattern"""
    load_dotenv()

    from config import config

    app = Flask(__name__)
    settings = config.get(config_name or os.getenv('FLASK_ENV', 'default'), config['default'])
    app.config.from_object(settings)
    app.config['SECRET_KEY'] = os.getenv('SECRET_KEY', secrets.token_hex(32))
    app.config['JSON_SORT_KEYS'] = False

    # Register blueprints
    from valuta.main import bp as main_bp
    app.register_blueprint(main_bp)

    @app.after_request
    def add_security_headers(response):
        response.headers['X-Content-Type-Options'] = 'nosniff'
        response.headers['X-Frame-Options'] = 'DENY'
        return response

    return app
