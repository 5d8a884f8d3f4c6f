import os
from valuta import create_app

# WSGI entry point; gunicorn loads `app:application`
application = create_app(os.environ.get('FLASK_ENV', 'production'))
app = application

if __name__ == "__main__":
    port = int(os.environ.get('PORT', 8080))

    if os.environ.get('FLASK_ENV') == 'development':
        print("🔧 Running in DEVELOPMENT mode")
        application.run(host='0.0.0.0', port=port, debug=True)
    else:
        print("🚀 Running in PRODUCTION mode")
        print("💡 Prefer ./start.sh, which serves the app through Gunicorn")
        application.run(
            host='0.0.0.0',
            port=port,
            debug=False,
            use_reloader=False,
            threaded=True
        )
